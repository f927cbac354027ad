#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qadele/plinalg.hpp"
#include "qadele/psynth.hpp"

namespace qadele {

using Complex = std::complex<double>;

// Basis label k_n...k_2k_1 for an amplitude index; qubit 1 is the least
// significant bit and prints rightmost.
std::string basis_label(uint64_t index, int n);

class ComplexState {
  public:
    ComplexState(int n, std::vector<Complex> amplitudes);
    static ComplexState basis(int n, uint64_t index);

    int qubits() const { return n_; }
    uint64_t dim() const { return amp_.size(); }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    const Complex& amplitude(uint64_t i) const { return amp_[i]; }

    double norm_squared() const;
    bool is_normalized(double tol = 1e-9) const;

  private:
    int n_;
    std::vector<Complex> amp_;
};

// One-, two-, and three-qubit gates of the standard family. The matrix is
// checked unitary to 1e-12 at construction. Conventions: Y is
// [[0, i], [-i, 0]]; Rz(theta) = diag(e^{-i theta/2}, e^{i theta/2}).
class ComplexGate {
  public:
    enum class Kind {
        GlobalPhase, // M(alpha) = e^{i alpha} I
        Phase,       // P(alpha) = diag(1, e^{i alpha})
        S,
        T,
        PauliX,
        PauliY,
        PauliZ,
        Rx,
        Ry,
        Rz,
        H,
        Cnot,
        Toffoli,
    };

    static ComplexGate global_phase(double alpha, int target);
    static ComplexGate phase(double alpha, int target);
    static ComplexGate s_gate(int target);
    static ComplexGate t_gate(int target);
    static ComplexGate pauli_x(int target);
    static ComplexGate pauli_y(int target);
    static ComplexGate pauli_z(int target);
    static ComplexGate rx(double theta, int target);
    static ComplexGate ry(double theta, int target);
    static ComplexGate rz(double theta, int target);
    static ComplexGate hadamard(int target);
    static ComplexGate cnot(int control, int target);
    static ComplexGate toffoli(int control1, int control2, int target);

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    const std::vector<int>& targets() const { return targets_; }
    int arity() const { return static_cast<int>(targets_.size()); }

    // 2x2 matrix for single-qubit kinds.
    std::array<Complex, 4> mat2() const;

    // Dense 2^arity square matrix, row-major.
    std::vector<Complex> dense() const;

    // The inverse gate (adjoint).
    ComplexGate adjoint() const;

  private:
    ComplexGate(Kind kind, double param, std::vector<int> targets);
    void check_unitary() const;

    Kind kind_;
    double param_;
    std::vector<int> targets_;
};

ComplexState apply_complex(const ComplexGate& gate, const ComplexState& state);

// Full 2^n matrix of the gate lifted to n qubits (identity elsewhere).
std::vector<Complex> lift_gate(const ComplexGate& gate, int n);

// |amplitude|^2 per basis label; requires a normalized state.
std::map<std::string, double> probabilities(const ComplexState& state);

// Seeded Born sampling; identical seeds reproduce identical sequences.
std::vector<uint64_t> sample_outcomes(const ComplexState& state, uint64_t seed, size_t count);
uint64_t measure_sample(const ComplexState& state, uint64_t seed);

// n-qubit state with coefficients in Z_p mod p^k; integral coefficients
// are the normalization condition, so every representable state is
// normalized by construction.
class PadicState {
  public:
    PadicState(int64_t p, int k, int n, std::vector<BigInt> amplitudes);
    static PadicState basis(int64_t p, int k, int n, uint64_t index);

    int qubits() const { return n_; }
    uint64_t dim() const { return amp_.size(); }
    int64_t prime() const { return p_; }
    int precision() const { return k_; }
    const BigInt& modulus() const { return pk_; }
    const std::vector<BigInt>& amplitudes() const { return amp_; }
    PadicInt amplitude(uint64_t i) const;

  private:
    int64_t p_;
    int k_;
    int n_;
    BigInt pk_;
    std::vector<BigInt> amp_;
};

// Full-matrix gate; dimensions must match 2^n, gate must pass is_gl, and
// (p, k) must agree exactly.
PadicState apply_padic(const PadicMatrix& gate, const PadicState& state);

// 2x2 word embedded at one qubit.
PadicState apply_padic(const GateWord& word, int target, const PadicState& state);

// Valuation per basis label; larger valuation = smaller p-adic probability.
std::map<std::string, Valuation> padic_probabilities(const PadicState& state);

// One coefficient of an adelic state over Q: a real archimedean component,
// explicitly listed p-adic components, and an integer tail standing for the
// value at every unlisted prime.
struct AdelicCoefficient {
    double inf = 0.0;
    std::map<int64_t, PadicInt> locals;
    BigInt tail = 0;
    bool tail_integral = true;

    friend bool operator==(const AdelicCoefficient&, const AdelicCoefficient&) = default;
};

class AdelicState {
  public:
    AdelicState(int n, std::vector<AdelicCoefficient> coefficients);

    int qubits() const { return n_; }
    uint64_t dim() const { return c_.size(); }
    const std::vector<AdelicCoefficient>& coefficients() const { return c_; }
    AdelicCoefficient& coefficient(uint64_t i) { return c_[i]; }
    const AdelicCoefficient& coefficient(uint64_t i) const { return c_[i]; }

    // Union of listed primes across coefficients.
    std::vector<int64_t> support() const;

  private:
    int n_;
    std::vector<AdelicCoefficient> c_;
};

// Local factor of a finite-type gate at one prime: either a 2x2 word
// embedded at a qubit, or a full 2^n matrix in GL(Z_p).
struct AdelicLocalGate {
    std::optional<GateWord> word;
    int target = 0;
    std::optional<PadicMatrix> matrix;
};

// Finite-type gate: a real orthogonal archimedean part (empty = identity)
// and local parts at finitely many primes; identity at all other places.
struct AdelicGate {
    std::vector<double> arch; // row-major 2^n x 2^n, or empty
    std::map<int64_t, AdelicLocalGate> locals;
};

// True when the matrix is orthogonal within tol.
bool is_orthogonal(const std::vector<double>& m, int n, double tol = 1e-12);

AdelicState apply_adelic(const AdelicGate& gate, const AdelicState& state);

// Integral at every listed finite place, archimedean l2 norm 1 within 1e-9,
// and integral tails.
bool is_normalized_adelic(const AdelicState& state);

} // namespace qadele
