#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qadele/bigint.hpp"
#include "qadele/errors.hpp"

namespace qadele {

// Square integer matrix, arbitrary-precision entries.
class IntMatrix {
  public:
    explicit IntMatrix(int n);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

    int dim() const { return n_; }
    const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, BigInt v);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    int n_;
    std::vector<BigInt> e_;
};

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
BigInt int_det(const IntMatrix& a);

// Generator alphabet over Z: the N-cycle X, its negative -X (odd N),
// the shift P = I + E12, and Z = diag(1, -1) (N = 2 only).
enum class HRGen { Xcyc, NegXcyc, Pshift, Zflip };

struct HRSymbol {
    HRGen name;
    BigInt exponent;

    friend bool operator==(const HRSymbol&, const HRSymbol&) = default;
};

// Word over the GL_N(Z) generator alphabet. Exponents of X reduce mod N,
// of -X mod 2N, of Z mod 2; adjacent symbols carry distinct names.
class HRWord {
  public:
    explicit HRWord(int n);

    int dim() const { return n_; }
    const std::vector<HRSymbol>& symbols() const { return symbols_; }
    bool empty() const { return symbols_.empty(); }

    void push(HRGen name, BigInt exponent);
    void append(const HRWord& w);

    // Token text: "X^m", "P^b", "NX^m", "Z".
    std::string str() const;
    static HRWord parse(const std::string& text, int n);

    friend bool operator==(const HRWord&, const HRWord&) = default;

  private:
    int n_;
    std::vector<HRSymbol> symbols_;
};

// The pair (X, P): the cyclic permutation sending e_i to e_{i+1}, and the
// single transvection I + E12. For N = 2 these are the swap and the shift.
std::pair<IntMatrix, IntMatrix> hr_generators(int n);

IntMatrix hr_generator_matrix(HRGen g, int n);
IntMatrix eval_hr(const HRWord& w);

// Decomposes g with det = +-1 into a word that evaluates back to g exactly:
// one det-(-1) generator peeled up front when needed, then integer row
// reduction to transvections, each rewritten over the alphabet through
// cyclic conjugation and the commutator identity.
HRWord decompose_glnz(const IntMatrix& g);

} // namespace qadele
