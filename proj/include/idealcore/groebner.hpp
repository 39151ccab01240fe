#pragma once

#include "idealcore/ring.hpp"

namespace idealcore {

struct GBOptions {
    // S-pair reductions allowed per basis computation; exceeding the budget
    // raises ResourceError rather than returning a truncated basis.
    std::size_t pair_cap = 200000;
    // Record each basis element as an explicit combination of the input
    // generators (needed for syzygies).
    bool track_cofactors = false;
};

// Reduced Groebner basis under `order`: monic leading coefficients, no term
// of any element divisible by another element's leading monomial, sorted
// ascending by leading monomial.  Elements are kept term-sorted under
// `order` itself (which may differ from the context canonical order);
// callers that hand polynomials onward re-canonicalize them.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> gens;
    // When tracked: gens[i] == sum_j cofactors[i][j] * source[j].
    std::vector<std::vector<Polynomial>> cofactors;
    std::vector<Polynomial> source;
    std::size_t pair_reductions = 0;

    bool is_unit_ideal() const;
    bool contains_monomial(const Monomial& m) const; // some lm divides m
};

// Buchberger with coprime + chain pair pruning and full tail reduction.
// The context supplies field and weights only; quotient semantics live a
// level up (callers adjoin the defining ideal's generators themselves).
GroebnerBasis buchberger(const Ctx& ctx, std::vector<Polynomial> gens,
                         const MonomialOrder& ord, const GBOptions& opts = {});

// Remainder of full multivariate division of f by G under G.order; no term
// of the result is divisible by any leading monomial of G, and f - result
// lies in the ideal of G.  Accepts f in any term sort; the result comes
// back sorted under G.order.  With `quotients`, fills division cofactors:
// f == sum_i (*quotients)[i] * G.gens[i] + result.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       std::vector<Polynomial>* quotients = nullptr);

// Krull dimension of ctx/(LT ideal of G): maximum size of a variable subset
// that meets no leading-monomial support.  Unit ideal -> -1; zero ideal ->
// number of variables.
int krull_dimension(const Ctx& ctx, const GroebnerBasis& G);

// Count of monomials outside the leading-term ideal (k-dimension of the
// quotient).  Requires krull_dimension <= 0; ShapeError otherwise.  The
// unit ideal counts 0.
long long vector_space_dimension(const Ctx& ctx, const GroebnerBasis& G);

// Rows a = (a_1..a_n) with sum_j a_j gens[j] == 0, generating the full
// first syzygy module of the generator sequence (tracked Buchberger plus
// the standard lifting of S-pair reductions).  Every row is verified to
// annihilate the generators symbolically before being returned.
struct SyzygyMatrix {
    std::vector<std::vector<Polynomial>> rows;
};

SyzygyMatrix syzygies(const Ctx& ctx, const std::vector<Polynomial>& gens,
                      const GBOptions& opts = {});

} // namespace idealcore
