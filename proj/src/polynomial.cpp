#include "idealcore/polynomial.hpp"

#include <algorithm>

namespace idealcore {

Polynomial Polynomial::from_terms(std::vector<Term> ts, const MonomialOrder& o) {
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.m, b.m, o) == Cmp::GT;
    });
    Polynomial p;
    for (Term& t : ts) {
        if (t.c.is_zero()) continue;
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c = p.t_.back().c + t.c;
            if (p.t_.back().c.is_zero()) p.t_.pop_back();
        } else {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> ts) {
    Polynomial p;
    p.t_ = std::move(ts);
    return p;
}

const Term& Polynomial::lt() const {
    if (t_.empty()) throw InternalError("leading term of the zero polynomial");
    return t_.front();
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || !(t_[i].c == o.t_[i].c)) return false;
    return true;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : t_)
        if (t.m.weighted_degree() != t_.front().m.weighted_degree()) return false;
    return true;
}

long long Polynomial::weighted_degree() const {
    if (t_.empty()) throw InternalError("degree of the zero polynomial");
    long long d = t_.front().m.weighted_degree();
    for (const Term& t : t_) d = std::max(d, t.m.weighted_degree());
    return d;
}

bool Polynomial::has_constant_term() const {
    for (const Term& t : t_)
        if (t.m.is_one()) return true;
    return false;
}

Polynomial resort(const Polynomial& p, const MonomialOrder& o) {
    return Polynomial::from_terms(p.t_, o);
}

Polynomial poly_neg(const Polynomial& p) {
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const Term& t : p.terms()) ts.push_back({-t.c, t.m});
    return Polynomial::from_sorted(std::move(ts));
}

Polynomial poly_scale(const Polynomial& p, const Coeff& c) {
    if (c.is_zero()) return {};
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const Term& t : p.terms()) ts.push_back({t.c * c, t.m});
    // scaling by a nonzero field element kills no term and keeps order
    return Polynomial::from_sorted(std::move(ts));
}

Polynomial poly_mul_term(const Polynomial& p, const Coeff& c, const Monomial& m) {
    if (c.is_zero()) return {};
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const Term& t : p.terms()) ts.push_back({t.c * c, t.m * m});
    return Polynomial::from_sorted(std::move(ts));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const MonomialOrder& o) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        Cmp c = mono_cmp(ta[i].m, tb[j].m, o);
        if (c == Cmp::GT) {
            out.push_back(ta[i++]);
        } else if (c == Cmp::LT) {
            out.push_back(tb[j++]);
        } else {
            Coeff s = ta[i].c + tb[j].c;
            if (!s.is_zero()) out.push_back({std::move(s), ta[i].m});
            ++i; ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) out.push_back(tb[j]);
    return Polynomial::from_sorted(std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& o) {
    return poly_add(a, poly_neg(b), o);
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& o) {
    Polynomial acc;
    const Polynomial& big = a.size() >= b.size() ? a : b;
    const Polynomial& small = a.size() >= b.size() ? b : a;
    for (const Term& t : small.terms())
        acc = poly_add(acc, poly_mul_term(big, t.c, t.m), o);
    return acc;
}

Polynomial poly_exact_div(const Polynomial& p, const Polynomial& g, const MonomialOrder& o) {
    if (g.is_zero()) throw InternalError("division by the zero polynomial");
    Polynomial rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        if (!g.lm().divides(rem.lm()))
            throw InternalError("inexact polynomial division");
        Coeff c = rem.lc() / g.lc();
        Monomial m = rem.lm() / g.lm();
        quot.push_back({c, m});
        rem = poly_sub(rem, poly_mul_term(g, c, m), o);
    }
    return Polynomial::from_terms(std::move(quot), o);
}

Polynomial poly_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return poly_scale(p, p.lc().inv());
}

} // namespace idealcore
