#include "idealcore/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <utility>

#include "idealcore/counters.hpp"

namespace idealcore {

namespace {

// Scale factor bringing p to basis-internal form: over F_p monic; over Q
// coprime integer coefficients with positive leading one, which keeps
// coefficient growth down without the denominators monic scaling invites.
Coeff normalizing_factor(const Polynomial& p) {
    if (p.lc().field().kind == FieldKind::prime) return p.lc().inv();
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : p.terms()) {
        mpz_class n = t.c.rat().get_num();
        mpz_class d = t.c.rat().get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class f(den_lcm, num_gcd);
    f.canonicalize();
    if (p.lc().is_negative()) f = -f;
    return Coeff::from_mpq(f);
}

// Full multivariate division of f by gs under o.  When quot is given it must
// have gs.size() entries; quotient terms are appended per divisor (each such
// stream is strictly decreasing, since the working leading monomial is).
Polynomial divide_full(const Polynomial& f, const std::vector<Polynomial>& gs,
                       const MonomialOrder& o, std::vector<std::vector<Term>>* quot) {
    ++counters().normal_forms;
    Polynomial p = resort(f, o);
    std::vector<Term> rem;
    while (!p.is_zero()) {
        bool reduced = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const Polynomial& g = gs[i];
            if (g.is_zero() || !g.lm().divides(p.lm())) continue;
            Coeff c = p.lc() / g.lc();
            Monomial m = p.lm() / g.lm();
            p = poly_sub(p, poly_mul_term(g, c, m), o);
            if (quot) (*quot)[i].push_back({c, m});
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(p.lt());
            std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
            p = Polynomial::from_sorted(std::move(rest));
        }
    }
    return Polynomial::from_sorted(std::move(rem));
}

struct PairRec {
    unsigned i, j;
    Monomial lcm;
    unsigned deg;
};

// normal selection: smallest lcm degree first, then the order, then indices
struct PairCmp {
    MonomialOrder ord;
    bool operator()(const PairRec& a, const PairRec& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        Cmp c = mono_cmp(a.lcm, b.lcm, ord);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

bool spair_check_enabled() {
    const char* v = std::getenv("IDEALCORE_CHECK_SPAIRS");
    return v && *v && *v != '0';
}

} // namespace

bool GroebnerBasis::is_unit_ideal() const {
    return gens.size() == 1 && gens.front().is_monomial() && gens.front().lm().is_one();
}

bool GroebnerBasis::contains_monomial(const Monomial& m) const {
    for (const Polynomial& g : gens)
        if (g.lm().divides(m)) return true;
    return false;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       std::vector<Polynomial>* quotients) {
    std::vector<std::vector<Term>> qt;
    std::vector<std::vector<Term>>* qp = nullptr;
    if (quotients) {
        qt.resize(G.gens.size());
        qp = &qt;
    }
    Polynomial r = divide_full(f, G.gens, G.order, qp);
    if (quotients) {
        quotients->clear();
        for (auto& ts : qt) quotients->push_back(Polynomial::from_sorted(std::move(ts)));
    }
    return r;
}

GroebnerBasis buchberger(const Ctx& ctx, std::vector<Polynomial> gens,
                         const MonomialOrder& ord, const GBOptions& opts) {
    ++counters().gb_computations;
    const bool track = opts.track_cofactors;
    const auto& w = ctx->weights();
    const std::size_t nsrc = gens.size();

    GroebnerBasis out;
    out.order = ord;
    out.source = gens;

    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> rows; // basis[i] == rows[i] . source
    std::set<PairRec, PairCmp> queue{PairCmp{ord}};
    std::set<std::pair<unsigned, unsigned>> done;

    // row -= sum_i quot[i] * rows[i], the transport of a division step
    auto apply_quotients = [&](std::vector<Polynomial> row,
                               const std::vector<std::vector<Term>>& quot) {
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (quot[i].empty()) continue;
            Polynomial q = Polynomial::from_sorted(quot[i]);
            for (std::size_t col = 0; col < nsrc; ++col)
                if (!rows[i][col].is_zero())
                    row[col] = poly_sub(row[col], poly_mul(q, rows[i][col], ord), ord);
        }
        return row;
    };

    auto add_element = [&](const Polynomial& p0, std::vector<Polynomial> row) {
        Coeff f = normalizing_factor(p0);
        Polynomial p = poly_scale(p0, f);
        if (track)
            for (Polynomial& e : row) e = poly_scale(e, f);
        unsigned t = static_cast<unsigned>(basis.size());
        basis.push_back(std::move(p));
        if (track) rows.push_back(std::move(row));
        for (unsigned i = 0; i < t; ++i) {
            Monomial l = Monomial::lcm(basis[i].lm(), basis[t].lm(), w);
            queue.insert({i, t, l, l.total_degree()});
        }
    };

    for (std::size_t k = 0; k < nsrc; ++k) {
        Polynomial p = resort(gens[k], ord);
        if (p.is_zero()) continue;
        std::vector<std::vector<Term>> quot(basis.size());
        Polynomial r = divide_full(p, basis, ord, track ? &quot : nullptr);
        if (r.is_zero()) continue;
        std::vector<Polynomial> row;
        if (track) {
            row.assign(nsrc, Polynomial{});
            row[k] = ctx->one();
            row = apply_quotients(std::move(row), quot);
        }
        add_element(r, std::move(row));
    }

    std::size_t reductions = 0;
    while (!queue.empty()) {
        PairRec pr = *queue.begin();
        queue.erase(queue.begin());
        done.insert({pr.i, pr.j});
        const Polynomial& gi = basis[pr.i];
        const Polynomial& gj = basis[pr.j];
        if (gi.lm().coprime(gj.lm())) continue;
        bool chained = false;
        for (unsigned k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || !basis[k].lm().divides(pr.lcm)) continue;
            chained = done.count({std::min(pr.i, k), std::max(pr.i, k)}) &&
                      done.count({std::min(pr.j, k), std::max(pr.j, k)});
        }
        if (chained) continue;

        if (++reductions > opts.pair_cap)
            throw ResourceError("basis computation exceeded the pair-reduction budget of " +
                                std::to_string(opts.pair_cap));
        ++counters().pair_reductions;

        Coeff ci = gi.lc().inv(), cj = gj.lc().inv();
        Monomial mi = pr.lcm / gi.lm(), mj = pr.lcm / gj.lm();
        Polynomial sp = poly_sub(poly_mul_term(gi, ci, mi), poly_mul_term(gj, cj, mj), ord);
        std::vector<std::vector<Term>> quot(basis.size());
        Polynomial nf = divide_full(sp, basis, ord, track ? &quot : nullptr);
        if (nf.is_zero()) continue;
        std::vector<Polynomial> row;
        if (track) {
            row.assign(nsrc, Polynomial{});
            for (std::size_t col = 0; col < nsrc; ++col)
                row[col] = poly_sub(poly_mul_term(rows[pr.i][col], ci, mi),
                                    poly_mul_term(rows[pr.j][col], cj, mj), ord);
            row = apply_quotients(std::move(row), quot);
        }
        add_element(nf, std::move(row));
    }

    // interreduce: keep the minimal heads, fully tail-reduce each survivor
    // against the others, scale monic
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                (basis[i].lm() != basis[j].lm() || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<std::size_t> surv;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) surv.push_back(i);

    std::vector<Polynomial> red;
    std::vector<std::vector<Polynomial>> redrows;
    for (std::size_t si = 0; si < surv.size(); ++si) {
        std::vector<Polynomial> others;
        std::vector<std::size_t> omap;
        for (std::size_t sj = 0; sj < surv.size(); ++sj)
            if (sj != si) {
                others.push_back(basis[surv[sj]]);
                omap.push_back(surv[sj]);
            }
        std::vector<std::vector<Term>> quot(others.size());
        Polynomial r = divide_full(basis[surv[si]], others, ord, track ? &quot : nullptr);
        Coeff c = r.lc().inv();
        std::vector<Polynomial> row;
        if (track) {
            row = rows[surv[si]];
            for (std::size_t oi = 0; oi < others.size(); ++oi) {
                if (quot[oi].empty()) continue;
                Polynomial q = Polynomial::from_sorted(quot[oi]);
                for (std::size_t col = 0; col < nsrc; ++col)
                    if (!rows[omap[oi]][col].is_zero())
                        row[col] = poly_sub(row[col], poly_mul(q, rows[omap[oi]][col], ord), ord);
            }
            for (Polynomial& e : row) e = poly_scale(e, c);
        }
        red.push_back(poly_scale(r, c));
        redrows.push_back(std::move(row));
    }

    std::vector<std::size_t> perm(red.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return mono_cmp(red[a].lm(), red[b].lm(), ord) == Cmp::LT;
    });
    for (std::size_t i : perm) {
        out.gens.push_back(red[i]);
        if (track) out.cofactors.push_back(redrows[i]);
    }
    out.pair_reductions = reductions;

    if (spair_check_enabled()) {
        for (std::size_t i = 0; i < out.gens.size(); ++i)
            for (std::size_t j = i + 1; j < out.gens.size(); ++j) {
                const Polynomial& a = out.gens[i];
                const Polynomial& b = out.gens[j];
                Monomial l = Monomial::lcm(a.lm(), b.lm(), w);
                Polynomial sp = poly_sub(poly_mul_term(a, a.lc().inv(), l / a.lm()),
                                         poly_mul_term(b, b.lc().inv(), l / b.lm()), ord);
                if (!divide_full(sp, out.gens, ord, nullptr).is_zero())
                    throw InternalError("reduced basis fails the S-pair check");
            }
        if (track)
            for (std::size_t i = 0; i < out.gens.size(); ++i) {
                Polynomial acc;
                for (std::size_t j = 0; j < nsrc; ++j)
                    acc = poly_add(acc, poly_mul(out.cofactors[i][j],
                                                 resort(out.source[j], ord), ord), ord);
                if (acc != out.gens[i])
                    throw InternalError("cofactor rows fail to reproduce the basis");
            }
    }
    return out;
}

int krull_dimension(const Ctx& ctx, const GroebnerBasis& G) {
    for (const Polynomial& g : G.gens)
        if (g.lm().is_one()) return -1;
    const std::size_t n = ctx->nvars();
    if (n > 24) throw InternalError("dimension search is exponential in variables; 24 exceeded");
    std::vector<std::uint64_t> sup;
    sup.reserve(G.gens.size());
    for (const Polynomial& g : G.gens) sup.push_back(g.lm().support());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool independent = true;
        for (std::uint64_t s : sup)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

long long vector_space_dimension(const Ctx& ctx, const GroebnerBasis& G) {
    int d = krull_dimension(ctx, G);
    if (d > 0) throw ShapeError("vector-space dimension needs a zero-dimensional quotient, got dimension " +
                                std::to_string(d));
    if (d < 0) return 0;
    const std::size_t n = ctx->nvars();
    auto divisible = [&](const Monomial& m) {
        for (const Polynomial& g : G.gens)
            if (g.lm().divides(m)) return true;
        return false;
    };
    long long count = 0;
    struct Node {
        std::vector<unsigned> exps;
        std::size_t start;
    };
    std::vector<Node> stack;
    stack.push_back({std::vector<unsigned>(n, 0), 0});
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        if (divisible(ctx->monomial(nd.exps))) continue;
        ++count;
        for (std::size_t i = nd.start; i < n; ++i) {
            Node child{nd.exps, i};
            ++child.exps[i];
            stack.push_back(std::move(child));
        }
    }
    return count;
}

SyzygyMatrix syzygies(const Ctx& ctx, const std::vector<Polynomial>& gens,
                      const GBOptions& opts) {
    const std::size_t n = gens.size();
    const MonomialOrder& ord = ctx->canonical_order();
    const auto& w = ctx->weights();
    SyzygyMatrix out;

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n; ++i) {
        if (gens[i].is_zero()) {
            std::vector<Polynomial> unit(n);
            unit[i] = ctx->one();
            out.rows.push_back(std::move(unit)); // a zero generator is free to kill
        } else {
            live.push_back(i);
        }
    }

    std::vector<std::vector<Polynomial>> cand; // rows over the live subsequence
    if (!live.empty()) {
        std::vector<Polynomial> F;
        for (std::size_t i : live) F.push_back(gens[i]);
        GBOptions topts = opts;
        topts.track_cofactors = true;
        GroebnerBasis G = buchberger(ctx, F, ord, topts);
        const std::size_t k = F.size();

        // the transport of a vector over G down to a vector over F
        auto transport = [&](const std::vector<Term>& coef, std::size_t gi,
                             std::vector<Polynomial>& row) {
            if (coef.empty()) return;
            Polynomial q = Polynomial::from_sorted(coef);
            for (std::size_t col = 0; col < k; ++col)
                if (!G.cofactors[gi][col].is_zero())
                    row[col] = poly_add(row[col], poly_mul(q, G.cofactors[gi][col], ord), ord);
        };

        // division rows: e_j - (representation of F_j in G) . cofactors
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Polynomial> q;
            if (!normal_form(F[j], G, &q).is_zero())
                throw InternalError("generator fails to reduce against its own basis");
            std::vector<Polynomial> row(k);
            row[j] = ctx->one();
            for (std::size_t gi = 0; gi < G.gens.size(); ++gi)
                if (!q[gi].is_zero())
                    for (std::size_t col = 0; col < k; ++col)
                        if (!G.cofactors[gi][col].is_zero())
                            row[col] = poly_sub(row[col],
                                                poly_mul(q[gi], G.cofactors[gi][col], ord), ord);
            cand.push_back(std::move(row));
        }

        // lifted S-pair relations for every basis pair (no pruning here:
        // the full set is what generates the syzygy module)
        for (std::size_t i = 0; i < G.gens.size(); ++i)
            for (std::size_t j = i + 1; j < G.gens.size(); ++j) {
                const Polynomial& a = G.gens[i];
                const Polynomial& b = G.gens[j];
                Monomial l = Monomial::lcm(a.lm(), b.lm(), w);
                Coeff ca = a.lc().inv(), cb = b.lc().inv();
                Monomial ma = l / a.lm(), mb = l / b.lm();
                Polynomial sp = poly_sub(poly_mul_term(a, ca, ma), poly_mul_term(b, cb, mb), ord);
                std::vector<Polynomial> q;
                if (!normal_form(sp, G, &q).is_zero())
                    throw InternalError("S-polynomial fails to reduce against a completed basis");
                std::vector<Polynomial> row(k);
                transport({{ca, ma}}, i, row);
                transport({{-cb, mb}}, j, row);
                for (std::size_t gi = 0; gi < G.gens.size(); ++gi)
                    if (!q[gi].is_zero())
                        for (std::size_t col = 0; col < k; ++col)
                            if (!G.cofactors[gi][col].is_zero())
                                row[col] = poly_sub(row[col],
                                                    poly_mul(q[gi], G.cofactors[gi][col], ord),
                                                    ord);
                cand.push_back(std::move(row));
            }
    }

    for (const auto& row : cand) {
        bool zero = true;
        for (const Polynomial& e : row) zero = zero && e.is_zero();
        if (zero) continue;
        std::vector<Polynomial> full(n);
        for (std::size_t t = 0; t < live.size(); ++t) full[live[t]] = row[t];
        bool dup = false;
        for (const auto& r : out.rows) dup = dup || r == full;
        if (dup) continue;
        Polynomial acc;
        for (std::size_t j = 0; j < n; ++j)
            acc = ctx->add(acc, ctx->mul(full[j], gens[j]));
        if (!acc.is_zero()) throw InternalError("syzygy row fails to annihilate the generators");
        out.rows.push_back(std::move(full));
    }
    return out;
}

} // namespace idealcore
