#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idealcore/monomial.hpp"

namespace idealcore {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Term order, represented uniformly as a sequence of blocks compared left
// to right; earlier blocks dominate, which is exactly the elimination
// property needed for the block orders.  Plain grevlex / lex / weighted
// grevlex are single-block instances.
//
// Weighted grevlex compares (weighted degree, total degree, reverse lex).
// The extra total-degree step keeps the order admissible when some weight
// is 0, which internally extended contexts rely on.
struct MonomialOrder {
    enum class Kind { grevlex, lex, wgrevlex };

    struct Block {
        std::vector<std::size_t> vars;   // variable indices, compare order
        Kind kind = Kind::grevlex;
        std::vector<long long> weights;  // aligned with vars (wgrevlex only)
    };

    std::vector<Block> blocks;

    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder wgrevlex(std::vector<long long> weights);
    // Block order with `elim` first (grevlex) and `keep` second
    // (weighted grevlex); a Groebner basis under it intersects away the
    // `elim` variables.
    static MonomialOrder elimination(std::vector<std::size_t> elim,
                                     std::vector<std::size_t> keep,
                                     std::vector<long long> keep_weights);

    // Canonical cache key, also used to detect "same order".
    std::string key() const;
};

Cmp mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& o);

inline bool mono_greater(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    return mono_cmp(a, b, o) == Cmp::GT;
}

} // namespace idealcore
