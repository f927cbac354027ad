#pragma once

#include <optional>
#include <vector>

#include "qadele/padic.hpp"

namespace qadele {

// Square matrix over Z_p at uniform precision; entries are canonical
// residues in [0, p^k).
class PadicMatrix {
  public:
    PadicMatrix(int64_t p, int k, int n);
    static PadicMatrix identity(int64_t p, int k, int n);
    static PadicMatrix from_rows(int64_t p, int k, const std::vector<std::vector<BigInt>>& rows);

    int64_t prime() const { return p_; }
    int precision() const { return k_; }
    int dim() const { return n_; }
    const BigInt& modulus() const { return pk_; }

    const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, const BigInt& v);
    PadicInt entry(int i, int j) const;

    PadicMatrix with_precision(int k) const;
    bool is_identity() const;

    friend bool operator==(const PadicMatrix&, const PadicMatrix&) = default;

  private:
    int64_t p_;
    int k_;
    int n_;
    BigInt pk_;
    std::vector<BigInt> e_;
};

PadicMatrix mat_mul(const PadicMatrix& a, const PadicMatrix& b);
PadicInt det(const PadicMatrix& a);
bool is_gl(const PadicMatrix& a);

// Inverse mod p^k; requires is_gl(a).
PadicMatrix mat_inverse(const PadicMatrix& a);

// The three elementary types over Z_p: Tij(b) = I + b*Eij, the swap Pij,
// and the unit row scaling Di(u). Indices are 0-based.
struct ElementaryMatrix {
    enum class Kind { Transvection, Swap, Scale };

    Kind kind;
    int i = 0;
    int j = 0; // unused for Scale
    std::optional<PadicInt> value; // b for Transvection, u (a unit) for Scale
    int dim = 0;

    static ElementaryMatrix transvection(int i, int j, PadicInt b, int dim);
    static ElementaryMatrix swap(int i, int j, int dim);
    static ElementaryMatrix scale(int i, PadicUnit u, int dim);

    ElementaryMatrix inverse() const;
};

PadicMatrix elementary_to_matrix(const ElementaryMatrix& e, int64_t p, int k);

// L*A*R = diag(p^e1, ..., p^eN) mod p^k with L = product of l_factors in
// list order, R likewise. Exponents are nondecreasing; a trailing block
// that vanishes mod p^k reports floor markers.
struct SmithDecomposition {
    std::vector<ElementaryMatrix> l_factors;
    std::vector<ElementaryMatrix> r_factors;
    std::vector<Valuation> exponents;
};

SmithDecomposition smith_normal_form(const PadicMatrix& a);

// Independent check via minors: v(Delta_i) = min valuation over i x i minors
// of A, e_i = v(Delta_i) - v(Delta_{i-1}) wherever both are below the
// precision floor. Brute-force enumeration, N <= 6.
bool elementary_divisor_check(const PadicMatrix& a, const SmithDecomposition& s);

// Product of elementary factors in list order (identity when empty).
PadicMatrix product_of(const std::vector<ElementaryMatrix>& fs, int64_t p, int k, int n);

// diag(p^e1, ..., p^eN) mod p^k; floor entries are 0.
PadicMatrix smith_diagonal(const SmithDecomposition& s, int64_t p, int k);

} // namespace qadele
