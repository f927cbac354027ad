#pragma once

#include <cstdint>
#include <string>

#include "qadele/bigint.hpp"
#include "qadele/errors.hpp"

namespace qadele {

// Valuation of a residue known mod p^k: either the exact power of p dividing
// it, or the floor marker ">= bound" when the residue vanishes mod p^k and
// nothing more can be said at this precision.
struct Valuation {
    int value = 0;
    bool is_floor = false;

    std::string str() const;
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// An element of Z_p carried at explicit precision: the canonical residue
// r in [0, p^k). Operations never extend precision; mixing precisions
// truncates to the smaller k.
class PadicInt {
  public:
    PadicInt(int64_t p, int k, BigInt value);

    int64_t prime() const { return p_; }
    int precision() const { return k_; }
    const BigInt& residue() const { return r_; }
    const BigInt& modulus() const { return pk_; }

    bool is_zero() const { return r_ == 0; }
    bool is_unit() const { return r_ % p_ != 0; }
    Valuation valuation() const;

    PadicInt with_precision(int k) const;

    // Text form "p^k:r", e.g. "5^3:63".
    std::string str() const;
    static PadicInt parse(const std::string& text);

    friend PadicInt operator+(const PadicInt& x, const PadicInt& y);
    friend PadicInt operator-(const PadicInt& x, const PadicInt& y);
    friend PadicInt operator*(const PadicInt& x, const PadicInt& y);
    friend bool operator==(const PadicInt&, const PadicInt&) = default;

  private:
    struct Unchecked {};
    PadicInt(int64_t p, int k, BigInt r, BigInt pk, Unchecked);
    static void check_compatible(const PadicInt& x, const PadicInt& y);

    int64_t p_;
    int k_;
    BigInt r_;
    BigInt pk_;
};

// A unit of Z_p (residue coprime to p).
class PadicUnit {
  public:
    explicit PadicUnit(PadicInt v);
    PadicUnit(int64_t p, int k, BigInt value) : PadicUnit(PadicInt(p, k, std::move(value))) {}

    const PadicInt& value() const { return v_; }
    int64_t prime() const { return v_.prime(); }
    int precision() const { return v_.precision(); }
    const BigInt& residue() const { return v_.residue(); }

  private:
    PadicInt v_;
};

// Exponents (a, b) with zeta^a * (1+p)^b = u mod p^k, a in [0, p-2],
// b in [0, p^{k-1}).
struct UnitDecomposition {
    int64_t p = 0;
    int k = 0;
    int64_t a = 0;
    BigInt b;
};

PadicUnit inverse(const PadicUnit& u);

Valuation valuation(const PadicInt& x);

// Smallest generator of (Z/pZ)^*, p an odd prime.
int64_t primitive_root(int64_t p);

// Splits a unit along Z_p^* = <zeta> x <1+p> at finite precision. Odd p only.
UnitDecomposition unit_decompose(const PadicUnit& u);

// zeta^a (1+p)^b mod p^k, the inverse of unit_decompose.
PadicInt recompose(const UnitDecomposition& d);

} // namespace qadele
