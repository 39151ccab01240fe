#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "idealcore/groebner.hpp"

namespace idealcore {

// Ideal of a ring context, held as the generator sequence the caller gave.
// The sequence matters: syzygies and Fitting ideals are functions of the
// presentation, not just of the ideal.  Reduced bases are computed on demand
// and cached per monomial order; in quotient contexts every basis adjoins
// the defining ideal's generators, so membership and everything derived from
// it is taken modulo the quotient.  Handles are cheap values; copies share
// the basis cache.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ctx ctx, std::vector<Polynomial> gens);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const GroebnerBasis& basis() const; // canonical order
    const GroebnerBasis& basis(const MonomialOrder& ord) const;

    // Canonical form: the reduced basis of the ambient representative ideal
    // (generators plus defining ideal), ascending by leading monomial.
    const std::vector<Polynomial>& reduced_gens() const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& J) const;
    bool same_ideal(const Ideal& J) const;

    bool is_unit() const;
    bool is_zero_ideal() const; // zero in the quotient: every generator in Q0
    bool is_proper() const { return !is_unit(); }
    int dim() const;            // Krull dimension of ctx/this
    long long vdim() const;     // k-dimension of ctx/this; needs dim <= 0

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, GroebnerBasis> by_order;
    };

    Ctx ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

Ideal origin_ideal(const Ctx& ctx); // m = (all variables)

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned r); // r = 0 gives (1)

// I ∩ J by tag variable: eliminate s from s·I + (1−s)·J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

// I : J = intersection of I : g over the nonzero generators g of J; each
// I : g is (I ∩ (g)) divided through by g.  J = (0) is refused.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

// I : J^infinity, iterating the colon to stabilization (capped at 64 steps).
Ideal ideal_saturation(const Ideal& I, const Ideal& J);

// Generators of I ∩ k[kept variables] via a block order.  `target` must
// carry exactly the kept variables, in the original order.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop, const Ctx& target);

// f ∈ √I, decided by the Rabinowitsch trick in an extended context.
bool radical_membership(const Polynomial& f, const Ideal& I);

// f ∈ I·R_m for m the origin ideal: true iff (I : f) is not contained in m.
bool local_membership(const Polynomial& f, const Ideal& I);

// I·R_m ∩ R for dim(I) <= 0: the component of I at the origin, computed as
// I : (I : m^inf)^inf.  Positive-dimensional input is a shape error.
Ideal local_contraction_zero_dim(const Ideal& I);

// Rows of the presentation matrix of the generator sequence: first syzygies
// as vectors over ctx.  Quotient contexts take ambient syzygies of
// (generators, Q0 generators) projected onto the first block.
std::vector<std::vector<Polynomial>> syzygy_rows(const Ideal& I);

// Fitting ideal Fitt_j of the module presented by the generator sequence:
// (n−j)-minors of the syzygy matrix.  Fitt_n = (1); minors larger than the
// row count give (0).
Ideal fitting_ideal(const Ideal& I, std::size_t j);

} // namespace idealcore
