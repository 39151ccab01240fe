#pragma once

#include <vector>

#include "idealcore/coeff.hpp"
#include "idealcore/monomial.hpp"
#include "idealcore/order.hpp"

namespace idealcore {

struct Term {
    Coeff c;
    Monomial m;
};

// Sparse polynomial: nonzero terms, strictly decreasing under the order it
// was built with (the owning context's canonical order for everything that
// crosses a module boundary; engine-internal copies may be re-sorted under
// an active computation order and are re-canonicalized on the way out).
class Polynomial {
public:
    Polynomial() = default; // zero

    static Polynomial from_terms(std::vector<Term> ts, const MonomialOrder& o);
    // Trusted fast path: terms already strictly decreasing, no zero coeffs.
    static Polynomial from_sorted(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Term& lt() const; // first term; errors on zero
    const Coeff& lc() const { return lt().c; }
    const Monomial& lm() const { return lt().m; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    bool is_monomial() const { return t_.size() == 1; }
    // All terms share one cached weighted degree (zero poly: true).
    bool is_homogeneous() const;
    // Max cached weighted degree over terms; zero poly errors.
    long long weighted_degree() const;
    bool has_constant_term() const;

private:
    friend Polynomial resort(const Polynomial&, const MonomialOrder&);
    std::vector<Term> t_;
};

Polynomial resort(const Polynomial& p, const MonomialOrder& o);
Polynomial poly_neg(const Polynomial& p);
Polynomial poly_scale(const Polynomial& p, const Coeff& c);
// c*m*p; term orders are multiplicative, so sortedness is preserved.
Polynomial poly_mul_term(const Polynomial& p, const Coeff& c, const Monomial& m);
Polynomial poly_add(const Polynomial& a, const Polynomial& b, const MonomialOrder& o);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& o);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& o);
// Quotient p/g when g divides p exactly; errors otherwise.
Polynomial poly_exact_div(const Polynomial& p, const Polynomial& g, const MonomialOrder& o);
// Leading coefficient scaled to 1.
Polynomial poly_monic(const Polynomial& p);

} // namespace idealcore
