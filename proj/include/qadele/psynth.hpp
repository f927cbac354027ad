#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qadele/plinalg.hpp"

namespace qadele {

// The four 2x2 generators over Z_p: the swap X, the lower unipotent P-,
// the primitive-root scaling Mz = diag(zeta, 1), and P1p = diag(1+p, 1).
enum class Gen { X, PMinus, MZeta, POnePlusP };

struct GateSymbol {
    Gen name;
    BigInt exponent;

    friend bool operator==(const GateSymbol&, const GateSymbol&) = default;
};

// A word over the generators at fixed (p, k). Adjacent symbols always carry
// distinct names; zero exponents vanish; X powers reduce mod 2.
class GateWord {
  public:
    GateWord(int64_t p, int k);

    int64_t prime() const { return p_; }
    int precision() const { return k_; }
    const std::vector<GateSymbol>& symbols() const { return symbols_; }
    bool empty() const { return symbols_.empty(); }
    size_t size() const { return symbols_.size(); }

    void push(Gen name, BigInt exponent);
    void append(const GateWord& w);

    // Token text: "X", "P-^m", "Mz^a", "P1p^b", whitespace separated.
    std::string str() const;
    static GateWord parse(const std::string& text, int64_t p, int k);

    friend bool operator==(const GateWord&, const GateWord&) = default;

  private:
    int64_t p_;
    int k_;
    std::vector<GateSymbol> symbols_;
};

PadicMatrix generator_matrix(Gen g, int64_t p, int k);
PadicMatrix eval_word(const GateWord& w);

// Compiles g in GL_2(Z_p) mod p^k into a word over {X, P-, Mz, P1p}:
// peel det through the diagonal generators, force a unit into the lower-left
// corner with X if needed, then split the determinant-one remainder as
// upper * lower * upper unipotents. At most 12 symbols before merging.
GateWord synth_gl2(const PadicMatrix& g);

// A 2x2 word acting on coordinates (i, j) of an N-dimensional space,
// identity elsewhere. 0-based, i < j.
struct TwoLevelGate {
    int i = 0;
    int j = 0;
    GateWord word;
};

// Compiles g in GL_N(Z_p) mod p^k into two-level gates via the Smith
// factor lists; the product of the embedded gates in list order is g.
std::vector<TwoLevelGate> synth_gln(const PadicMatrix& g);

PadicMatrix embed_two_level(const TwoLevelGate& t, int n);
PadicMatrix eval_two_level(const std::vector<TwoLevelGate>& seq, int64_t p, int k, int n);

// Breadth-first closure of the generator set and its inverses inside
// GL_2(Z/p^k), compared against the group order formula
// p^{4(k-1)} (p^2-1)(p^2-p).
struct BfsReport {
    int64_t p = 0;
    int k = 0;
    uint64_t modulus = 0;
    uint64_t reachable = 0;
    BigInt group_order;
    bool complete = false;
};

BfsReport bfs_oracle(int64_t p, int k, uint64_t max_elements = 20000000);

} // namespace qadele
