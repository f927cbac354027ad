#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qadele {

using BigInt = boost::multiprecision::cpp_int;

// Canonical representative of a mod m, in [0, m). m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

// base^exp for small exponents, exact.
BigInt int_pow(int64_t base, int exp);

// base^exp mod m. Negative exponents resolve through mod_inv.
BigInt mod_pow(BigInt base, BigInt exp, const BigInt& m);

// Extended Euclid: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

// Inverse of a mod m; throws DomainError when gcd(a, m) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Determinant of a dense n x n integer matrix (row-major), Bareiss elimination.
BigInt det_int(std::vector<BigInt> m, int n);

} // namespace qadele
