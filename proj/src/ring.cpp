#include "idealcore/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace idealcore {

namespace {

bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Ctx RingContext::polynomial_ring(FieldSpec field, std::vector<std::string> vars,
                                 std::vector<long long> weights) {
    if (vars.empty()) throw InputError("a ring needs at least one variable");
    if (vars.size() > 64) throw InputError("too many variables (limit 64)");
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw InputError("weight count " + std::to_string(weights.size()) +
                         " does not match variable count " + std::to_string(vars.size()));
    for (long long w : weights)
        if (w <= 0) throw InputError("weights must be strictly positive");
    std::set<std::string> seen;
    for (const std::string& v : vars) {
        if (!valid_ident(v)) throw InputError("invalid variable name: '" + v + "'");
        if (!seen.insert(v).second) throw InputError("duplicate variable name: '" + v + "'");
    }
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->field_ = field;
    ctx->vars_ = std::move(vars);
    ctx->weights_ = std::move(weights);
    ctx->order_ = MonomialOrder::wgrevlex(ctx->weights_);
    ctx->unit_weights_ = std::all_of(ctx->weights_.begin(), ctx->weights_.end(),
                                     [](long long w) { return w == 1; });
    return ctx;
}

Ctx RingContext::with_quotient(std::vector<Polynomial> gens) const {
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (g.has_constant_term())
            throw InputError("quotient generator has a constant term (ideal not contained in m): " + str(g));
        kept.push_back(g);
    }
    if (kept.empty()) throw InputError("quotient requires at least one nonzero generator");
    auto ctx = std::shared_ptr<RingContext>(new RingContext(*this));
    ctx->quotient_ = std::move(kept);
    return ctx;
}

Ctx RingContext::ambient() const {
    if (!is_quotient()) return shared_from_this();
    auto ctx = std::shared_ptr<RingContext>(new RingContext(*this));
    ctx->quotient_.clear();
    return ctx;
}

Ctx RingContext::extended(const std::vector<std::string>& names,
                          const std::vector<long long>& ws) const {
    if (names.size() != ws.size()) throw InternalError("extended: name/weight size mismatch");
    if (nvars() + names.size() > 64) throw InputError("too many variables (limit 64)");
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->field_ = field_;
    ctx->vars_ = vars_;
    ctx->weights_ = weights_;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!valid_ident(names[i])) throw InternalError("invalid generated name: " + names[i]);
        if (ctx->var_index(names[i]) >= 0) throw InternalError("extension name clash: " + names[i]);
        if (ws[i] < 0) throw InternalError("negative extension weight");
        ctx->vars_.push_back(names[i]);
        ctx->weights_.push_back(ws[i]);
    }
    ctx->order_ = MonomialOrder::wgrevlex(ctx->weights_);
    ctx->unit_weights_ = std::all_of(ctx->weights_.begin(), ctx->weights_.end(),
                                     [](long long w) { return w == 1; });
    // lift the quotient generators into the larger ring
    for (const Polynomial& g : quotient_) ctx->quotient_.push_back(lift_to(ctx, g));
    return ctx;
}

std::string RingContext::signature() const {
    std::string s = field_.str() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ',';
        s += vars_[i] + ":" + std::to_string(weights_[i]);
    }
    s += "]";
    if (is_quotient()) {
        s += "/(";
        for (std::size_t i = 0; i < quotient_.size(); ++i) {
            if (i) s += ", ";
            s += str(quotient_[i]);
        }
        s += ")";
    }
    return s;
}

bool RingContext::same_ring(const RingContext& o) const {
    return this == &o || signature() == o.signature();
}

int RingContext::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

std::string RingContext::fresh_name(const std::string& base) const {
    if (var_index(base) < 0) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (var_index(cand) < 0) return cand;
    }
}

Monomial RingContext::monomial(std::vector<unsigned> exps) const {
    return Monomial(std::move(exps), weights_);
}

Polynomial RingContext::constant(Coeff c) const {
    if (!(c.field() == field_)) throw InputError("coefficient field mismatch");
    if (c.is_zero()) return {};
    return Polynomial::from_sorted({{std::move(c), Monomial::one(nvars())}});
}

Polynomial RingContext::variable(std::size_t i) const {
    std::vector<unsigned> e(nvars(), 0);
    e[i] = 1;
    return Polynomial::from_sorted({{Coeff::one(field_), monomial(std::move(e))}});
}

Polynomial RingContext::from_terms(std::vector<Term> ts) const {
    return Polynomial::from_terms(std::move(ts), order_);
}

Polynomial RingContext::add(const Polynomial& a, const Polynomial& b) const {
    return poly_add(a, b, order_);
}

Polynomial RingContext::sub(const Polynomial& a, const Polynomial& b) const {
    return poly_sub(a, b, order_);
}

Polynomial RingContext::mul(const Polynomial& a, const Polynomial& b) const {
    return poly_mul(a, b, order_);
}

Polynomial RingContext::pow(const Polynomial& a, unsigned k) const {
    Polynomial r = one();
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Polynomial RingContext::exact_div(const Polynomial& a, const Polynomial& b) const {
    return poly_exact_div(a, b, order_);
}

// ---- text form ----------------------------------------------------------

namespace {

struct Tok {
    enum Type { num, ident, plus, minus, star, caret, slash, end } type;
    std::string text;
    std::size_t pos;
};

std::vector<Tok> lex_poly(const std::string& s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::num, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, s.substr(i, j - i), i});
            i = j;
        } else {
            Tok::Type t;
            switch (c) {
            case '+': t = Tok::plus; break;
            case '-': t = Tok::minus; break;
            case '*': t = Tok::star; break;
            case '^': t = Tok::caret; break;
            case '/': t = Tok::slash; break;
            default:
                throw InputError("unexpected character '" + std::string(1, c) +
                                 "' at position " + std::to_string(i));
            }
            out.push_back({t, std::string(1, c), i});
            ++i;
        }
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

} // namespace

Polynomial RingContext::parse(const std::string& text) const {
    std::vector<Tok> toks = lex_poly(text);
    std::size_t at = 0;
    auto peek = [&]() -> const Tok& { return toks[at]; };
    auto take = [&]() -> const Tok& { return toks[at++]; };
    auto fail = [&](const std::string& what) -> void {
        throw InputError("parse error at position " + std::to_string(peek().pos) + ": " + what);
    };

    std::vector<Term> terms;
    bool first = true;
    while (peek().type != Tok::end) {
        // sign
        bool neg = false;
        if (peek().type == Tok::plus || peek().type == Tok::minus) {
            neg = take().type == Tok::minus;
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        first = false;
        // one term: factors joined by '*'
        Coeff coef = Coeff::one(field_);
        std::vector<unsigned> exps(nvars(), 0);
        bool any_factor = false;
        for (;;) {
            const Tok& t = peek();
            if (t.type == Tok::num) {
                take();
                std::string numtext = t.text, dentext = "1";
                if (peek().type == Tok::slash) {
                    take();
                    if (peek().type != Tok::num) fail("expected denominator digits after '/'");
                    dentext = take().text;
                }
                coef = coef * Coeff::from_fraction(numtext, dentext, field_);
            } else if (t.type == Tok::ident) {
                take();
                int vi = var_index(t.text);
                if (vi < 0) fail("unknown variable '" + t.text + "'");
                unsigned e = 1;
                if (peek().type == Tok::caret) {
                    take();
                    if (peek().type != Tok::num) fail("expected exponent digits after '^'");
                    const std::string& d = take().text;
                    if (d.size() > 6) fail("exponent too large");
                    e = static_cast<unsigned>(std::stoul(d));
                }
                exps[static_cast<std::size_t>(vi)] += e;
            } else {
                fail("expected a coefficient or variable");
            }
            any_factor = true;
            if (peek().type == Tok::star) { take(); continue; }
            break;
        }
        if (!any_factor) fail("empty term");
        if (neg) coef = -coef;
        terms.push_back({std::move(coef), monomial(std::move(exps))});
    }
    if (terms.empty() && first) throw InputError("empty polynomial text");
    return from_terms(std::move(terms));
}

std::string RingContext::str(const Polynomial& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Coeff a = t.c;
        if (first) {
            if (a.is_negative()) { out += "-"; a = a.abs(); }
        } else {
            out += a.is_negative() ? " - " : " + ";
            a = a.abs();
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars(); ++i) {
            unsigned e = t.m.exp(i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

// ---- embeddings ---------------------------------------------------------

Polynomial RingContext::lift_to(const Ctx& big, const Polynomial& p) const {
    if (big->nvars() < nvars()) throw InternalError("lift_to: target smaller than source");
    for (std::size_t i = 0; i < nvars(); ++i)
        if (big->vars()[i] != vars_[i])
            throw InternalError("lift_to: variable prefix mismatch");
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const Term& t : p.terms()) {
        std::vector<unsigned> e = t.m.exps();
        e.resize(big->nvars(), 0);
        ts.push_back({t.c, big->monomial(std::move(e))});
    }
    return big->from_terms(std::move(ts));
}

Polynomial RingContext::project_suffix(const Polynomial& p, const Ctx& small) const {
    if (small->nvars() > nvars()) throw InternalError("project_suffix: target larger than source");
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const Term& t : p.terms()) {
        for (std::size_t i = small->nvars(); i < nvars(); ++i)
            if (t.m.exp(i))
                throw InternalError("projection hits auxiliary variable " + vars_[i]);
        std::vector<unsigned> e(t.m.exps().begin(), t.m.exps().begin() +
                                static_cast<std::ptrdiff_t>(small->nvars()));
        ts.push_back({t.c, small->monomial(std::move(e))});
    }
    return small->from_terms(std::move(ts));
}

Polynomial RingContext::restrict_vars(const Polynomial& p, const std::vector<std::size_t>& keep,
                                      const Ctx& target) const {
    if (keep.size() != target->nvars()) throw InternalError("restrict_vars: arity mismatch");
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
        std::vector<unsigned> e(keep.size(), 0);
        unsigned kept = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            e[k] = t.m.exp(keep[k]);
            kept += e[k];
        }
        if (kept != t.m.total_degree()) continue; // term contains a zeroed variable
        ts.push_back({t.c, target->monomial(std::move(e))});
    }
    return target->from_terms(std::move(ts));
}

Polynomial RingContext::map_vars(const Polynomial& p, const std::vector<std::size_t>& keep,
                                 const Ctx& target) const {
    if (keep.size() != target->nvars()) throw InternalError("map_vars: arity mismatch");
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
        std::vector<unsigned> e(keep.size(), 0);
        unsigned kept = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            e[k] = t.m.exp(keep[k]);
            kept += e[k];
        }
        if (kept != t.m.total_degree())
            throw InternalError("map_vars: polynomial involves an eliminated variable");
        ts.push_back({t.c, target->monomial(std::move(e))});
    }
    return target->from_terms(std::move(ts));
}

} // namespace idealcore
