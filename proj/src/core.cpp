#include "idealcore/core.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "idealcore/groebner.hpp"
#include "idealcore/rng.hpp"

namespace idealcore {

namespace {

constexpr long kPoolRadius = 10000; // rational-mode sampling pool [-10^4, 10^4]
constexpr int kElementTries = 5;    // draws before giving up on f or h

Coeff draw_coeff(const FieldSpec& field, Rng& rng) {
    if (field.kind == FieldKind::prime)
        return Coeff::from_long(static_cast<long>(rng.uniform(0, static_cast<long long>(field.p) - 1)),
                                field);
    return Coeff::from_long(static_cast<long>(rng.uniform(-kPoolRadius, kPoolRadius)), field);
}

Coeff draw_nonzero(const FieldSpec& field, Rng& rng) {
    for (;;) {
        Coeff c = draw_coeff(field, rng);
        if (!c.is_zero()) return c;
    }
}

// In a quotient the colon test (Q0 : f) = Q0 is exact: elements of Q0 and
// zerodivisor representatives both enlarge the colon.
bool is_nonzerodivisor(const Ctx& C, const Polynomial& f) {
    if (f.is_zero()) return false;
    if (!C->is_quotient()) return true;
    Ctx amb = C->ambient();
    Ideal q0(amb, C->quotient_gens());
    return ideal_colon(q0, Ideal(amb, {f})).same_ideal(q0);
}

// weighted-homogeneous input: every generator a form, and in a quotient the
// defining ideal must be graded too (otherwise no grading survives)
bool graded_input(const Ideal& I) {
    for (const Polynomial& g : I.gens())
        if (!g.is_zero() && !g.is_homogeneous()) return false;
    for (const Polynomial& q : I.ctx()->quotient_gens())
        if (!q.is_homogeneous()) return false;
    return true;
}

// Some power product of the given weighted degree, if one exists; greedy
// exponent search keeps the choice deterministic.
std::optional<Monomial> monomial_of_weight(const Ctx& C, long long target) {
    if (target < 0) return std::nullopt;
    std::vector<unsigned> e(C->nvars(), 0);
    std::function<bool(std::size_t, long long)> go = [&](std::size_t i, long long rem) -> bool {
        if (rem == 0) return true; // remaining exponents stay 0
        if (i == C->nvars()) return false;
        const long long w = C->weights()[i];
        for (long long k = w > 0 ? rem / w : 0; k >= 0; --k) {
            e[i] = static_cast<unsigned>(k);
            if (go(i + 1, rem - k * w)) return true;
        }
        e[i] = 0;
        return false;
    };
    if (!go(0, target)) return std::nullopt;
    return C->monomial(e);
}

// Every power product of the given weighted degree, in exponent order.
std::vector<Monomial> monomials_of_weight(const Ctx& C, long long target) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(C->nvars(), 0);
    std::function<void(std::size_t, long long)> go = [&](std::size_t i, long long rem) {
        if (i == C->nvars()) {
            if (rem == 0) out.push_back(C->monomial(e));
            return;
        }
        const long long w = C->weights()[i];
        for (long long k = 0; w > 0 && k * w <= rem; ++k) {
            e[i] = static_cast<unsigned>(k);
            go(i + 1, rem - k * w);
        }
        e[i] = 0;
    };
    go(0, target);
    return out;
}

// Basis of the right nullspace of A (ncols columns), by Gauss-Jordan
// elimination over the coefficient field.
std::vector<std::vector<Coeff>> right_nullspace(std::vector<std::vector<Coeff>> A,
                                                std::size_t ncols, const FieldSpec& F) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < A.size(); ++col) {
        std::size_t sel = A.size();
        for (std::size_t r = rank; r < A.size(); ++r)
            if (!A[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == A.size()) continue;
        std::swap(A[rank], A[sel]);
        Coeff lead = A[rank][col].inv();
        for (Coeff& x : A[rank]) x = x * lead;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == rank || A[r][col].is_zero()) continue;
            Coeff factor = A[r][col];
            for (std::size_t c = 0; c < ncols; ++c) A[r][c] = A[r][c] - factor * A[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Coeff> v(ncols, Coeff::zero(F));
        v[free] = Coeff::one(F);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// B : f^infinity for a power-product f from the base ring: saturating by a
// product is saturating by its factors, so the whole job is one variable at
// a time.  Variable saturations stay small where a direct colon by a high
// power of f blows the basis up.
Ideal power_product_saturation(const Ideal& B, const Polynomial& f, const Ctx& base) {
    const Ctx& T = B.ctx();
    Ideal S = B;
    const Monomial& m = f.terms().front().m;
    for (std::size_t i = 0; i < base->nvars(); ++i)
        if (m.exp(i) > 0) S = ideal_saturation(S, Ideal(T, {T->variable(i)}));
    return S;
}

// The base-ring part [B : D]_0 of a colon in the extended ring, one weighted
// degree at a time: h*g ∈ B is NF(h*g) = 0 against a fixed basis of B, and
// the normal form is linear in h, so each graded piece is a nullspace over
// the coefficient field.  The pieces generate once a run of wmax consecutive
// degrees comes out full — every deeper monomial then has a divisor inside
// that run.  Returns nothing if the run never appears under the cap; the
// caller falls back to colon plus elimination.
std::optional<Ideal> graded_colon_zero_piece(const Ideal& B, const Ideal& D, const Ctx& base,
                                             long long cap) {
    const Ctx& T = B.ctx();
    GroebnerBasis G = buchberger(T, B.gens(), T->canonical_order());
    const FieldSpec F = base->field();
    long long wmax = 1;
    for (long long w : base->weights()) wmax = std::max(wmax, w);

    std::vector<Polynomial> out;
    long long full_run = 0;
    for (long long delta = 0; delta <= cap; ++delta) {
        std::vector<Monomial> basis = monomials_of_weight(base, delta);
        if (basis.empty()) continue;
        std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> row_of;
        std::vector<std::vector<Coeff>> A;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial hi = base->lift_to(T, base->from_terms({Term{Coeff::one(F), basis[i]}}));
            for (std::size_t gi = 0; gi < D.reduced_gens().size(); ++gi) {
                Polynomial nf = normal_form(T->mul(hi, D.reduced_gens()[gi]), G);
                for (const Term& t : nf.terms()) {
                    auto key = std::make_pair(gi, t.m.exps());
                    auto it = row_of.find(key);
                    if (it == row_of.end()) {
                        it = row_of.emplace(std::move(key), A.size()).first;
                        A.emplace_back(basis.size(), Coeff::zero(F));
                    }
                    A[it->second][i] = A[it->second][i] + t.c;
                }
            }
        }
        std::vector<std::vector<Coeff>> null = right_nullspace(std::move(A), basis.size(), F);
        for (const auto& v : null) {
            std::vector<Term> terms;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (!v[i].is_zero()) terms.push_back(Term{v[i], basis[i]});
            out.push_back(base->from_terms(std::move(terms)));
        }
        full_run = null.size() == basis.size() ? full_run + 1 : 0;
        if (full_run >= wmax) return Ideal(base, std::move(out));
    }
    return std::nullopt;
}

// Candidate nonzerodivisor inside I.  Monomial ideals get a random monomial
// generator (keeps every later colon monomial-friendly); graded inputs get a
// top-degree form so the grading survives the colon chain; otherwise a
// random combination of the generators.
Polynomial draw_f(const Ideal& I, bool graded, long long top, Rng& rng) {
    const Ctx& C = I.ctx();
    std::vector<const Polynomial*> live;
    for (const Polynomial& g : I.gens())
        if (!g.is_zero()) live.push_back(&g);
    if (live.empty()) throw InputError("cannot pick an element inside the zero ideal");

    bool monomial_ideal = std::all_of(live.begin(), live.end(),
                                      [](const Polynomial* g) { return g->is_monomial(); });
    if (monomial_ideal)
        return *live[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(live.size()) - 1))];

    if (graded) {
        Polynomial f;
        bool complete = true;
        for (const Polynomial* g : live) {
            auto M = monomial_of_weight(C, top - g->weighted_degree());
            if (!M) {
                complete = false;
                break;
            }
            Polynomial scaled = C->mul(C->from_terms({Term{draw_nonzero(C->field(), rng), *M}}), *g);
            f = C->add(f, scaled);
        }
        if (complete && !f.is_zero()) return f;
        for (const Polynomial* g : live) // fallback: a single top-degree form
            if (g->weighted_degree() == top) return *g;
    }

    Polynomial f;
    for (const Polynomial* g : live)
        f = C->add(f, C->mul(C->constant(draw_coeff(C->field(), rng)), *g));
    return f;
}

void record_uncertified(CoreResult& R) {
    R.certified = R.hypotheses.classification != IdealClass::hypotheses_unverified;
    if (!R.certified)
        R.hypotheses.warnings.push_back("not a certified core: hypothesis checks failed");
}

void check_inside(CoreResult& R, const Ideal& I) {
    if (!R.core) return;
    bool inside = true;
    for (const Polynomial& g : R.core->gens())
        if (!I.contains(g)) {
            inside = false;
            break;
        }
    R.checks["core_inside_ideal"] = inside;
}

} // namespace

const char* core_method_name(CoreMethod m) {
    switch (m) {
        case CoreMethod::probabilistic: return "probabilistic";
        case CoreMethod::deterministic: return "deterministic";
        case CoreMethod::both: return "both";
    }
    return "?";
}

const char* det_variant_name(DetVariant v) {
    return v == DetVariant::f_power ? "fpower" : "hsat";
}

UniversalSetup build_universal(const Ideal& I, int ell, std::uint64_t seed, bool want_h) {
    const Ctx& C = I.ctx();
    if (ell <= 0) throw InputError("universal setup needs a positive combination count");
    const auto& gens = I.gens();
    const std::size_t n = gens.size();
    if (n == 0) throw InputError("universal setup needs generators");

    UniversalSetup S;
    S.graded = graded_input(I);
    for (const Polynomial& g : gens)
        if (!g.is_zero()) S.top_degree = std::max(S.top_degree, g.weighted_degree());

    // one X variable per (generator, combination) pair; in the graded case
    // X_jl carries weight D - deg f_j so the combinations become forms
    std::vector<std::string> names;
    std::vector<long long> ws;
    for (int l = 1; l <= ell; ++l)
        for (std::size_t j = 0; j < n; ++j) {
            names.push_back(C->fresh_name("X_" + std::to_string(j + 1) + "_" + std::to_string(l)));
            ws.push_back(S.graded && !gens[j].is_zero() ? S.top_degree - gens[j].weighted_degree()
                                                        : 1);
        }
    S.extended = C->extended(names, ws);
    S.x_begin = C->nvars();
    const Ctx& T = S.extended;

    std::vector<Polynomial> bgens;
    for (int l = 0; l < ell; ++l) {
        Polynomial b;
        for (std::size_t j = 0; j < n; ++j) {
            if (gens[j].is_zero()) continue;
            Polynomial xv = T->variable(S.x_begin + static_cast<std::size_t>(l) * n + j);
            b = T->add(b, T->mul(xv, C->lift_to(T, gens[j])));
        }
        bgens.push_back(std::move(b));
    }
    S.B = Ideal(T, std::move(bgens));

    bool found = false;
    for (int attempt = 0; attempt < kElementTries && !found; ++attempt) {
        Rng rng = Rng::derive(seed, "universal-f", static_cast<std::uint64_t>(attempt));
        Polynomial cand = draw_f(I, S.graded, S.top_degree, rng);
        if (is_nonzerodivisor(C, cand)) {
            S.f = std::move(cand);
            found = true;
        }
    }
    if (!found)
        throw ResourceError("no nonzerodivisor found in the ideal within " +
                            std::to_string(kElementTries) +
                            " draws; the ideal lies inside the zerodivisors");

    if (want_h) {
        Ideal F = fitting_ideal(I, static_cast<std::size_t>(ell));
        // combine the minimal generators, not the raw minor list: the raw
        // minors are heavily redundant and their blind combination is a
        // dense mixed-degree element that chokes every later saturation
        const std::vector<Polynomial>& pool = F.reduced_gens();
        bool pool_graded = S.graded;
        long long ftop = 0;
        for (const Polynomial& g : pool) {
            if (!g.is_homogeneous()) pool_graded = false;
            ftop = std::max(ftop, g.weighted_degree());
        }
        bool got = false;
        for (int attempt = 0; attempt < kElementTries && !got; ++attempt) {
            Rng rng = Rng::derive(seed, "universal-h", static_cast<std::uint64_t>(attempt));
            Polynomial cand;
            if (pool_graded) {
                // monomial multipliers lift every piece to one degree, so
                // the saturation keeps the grading downstream
                bool complete = true;
                for (const Polynomial& g : pool) {
                    auto M = monomial_of_weight(C, ftop - g.weighted_degree());
                    if (!M) {
                        complete = false;
                        break;
                    }
                    cand = C->add(
                        cand, C->mul(C->from_terms({Term{draw_nonzero(C->field(), rng), *M}}), g));
                }
                if (!complete || cand.is_zero())
                    for (const Polynomial& g : pool)
                        if (g.weighted_degree() == ftop) {
                            cand = g;
                            break;
                        }
            } else {
                for (const Polynomial& g : pool)
                    cand = C->add(cand, C->mul(C->constant(draw_coeff(C->field(), rng)), g));
            }
            if (!is_nonzerodivisor(C, cand)) continue;
            if (!radical_membership(cand, F))
                throw InternalError("combination escaped the radical of its own ideal");
            S.h = std::move(cand);
            got = true;
        }
        if (!got)
            throw ResourceError("no nonzerodivisor found in the Fitting ideal within " +
                                std::to_string(kElementTries) + " draws");
    }
    return S;
}

CoreResult core_probabilistic(const Ideal& I, const CoreOptions& opts) {
    CoreResult R;
    R.method = CoreMethod::probabilistic;
    R.seed = opts.seed;
    R.hypotheses = classify_hypotheses(I);
    record_uncertified(R);
    // hypothesis violations outrank the shape gate: an unforced run on a
    // flagged ideal is refused as such, not as a mere shape mismatch
    if (!R.certified && !opts.force)
        throw HypothesisError("classification '" +
                              std::string(ideal_class_name(R.hypotheses.classification)) +
                              "': pass force to attempt the computation anyway");
    if (R.hypotheses.classification != IdealClass::m_primary)
        throw ShapeError("probabilistic core is restricted to m-primary ideals "
                         "(sampled reductions only stabilize at finite colength)");
    const int ell = R.hypotheses.ell;

    // A degenerate draw can pick up positive-dimensional components away
    // from the origin; those samples are discarded and redrawn.
    auto sample_origin_part = [&](int t, Ideal* part) -> ReductionCertificate {
        for (int retry = 0; retry < opts.sampling.attempts; ++retry) {
            std::uint64_t sub =
                Rng::derive(opts.seed, "core-sample",
                            (static_cast<std::uint64_t>(t) << 8) | static_cast<std::uint64_t>(retry))
                    .next();
            ReductionCertificate cert = sample_general_reduction(I, ell, sub, opts.sampling);
            try {
                *part = local_contraction_zero_dim(cert.J);
                return cert;
            } catch (const ShapeError&) {
                continue;
            }
        }
        throw ResourceError("no reduction sample with a zero-dimensional origin part within attempts=" +
                            std::to_string(opts.sampling.attempts));
    };

    Ideal C; // running intersection
    Ideal part;
    for (int t = 1; t <= opts.t_max + 1; ++t) {
        R.certificates.push_back(sample_origin_part(t, &part));
        Ideal next = t == 1 ? part : ideal_intersection(C, part);
        if (t > 1 && C.same_ideal(next)) {
            R.t_used = t - 1;
            R.core = C;
            break;
        }
        C = std::move(next);
    }
    if (!R.core)
        throw ResourceError("intersection of sampled reductions did not stabilize within t_max=" +
                            std::to_string(opts.t_max));

    check_inside(R, I);
    return R;
}

CoreResult core_deterministic(const Ideal& I, const CoreOptions& opts) {
    const Ctx& C = I.ctx();
    const bool mprim = is_m_primary(I);
    const bool graded = graded_input(I);
    if (!graded && !mprim)
        throw ShapeError("deterministic core needs a weighted-homogeneous or m-primary ideal "
                         "(no grading and no finite colength to contract with)");

    CoreResult R;
    R.method = CoreMethod::deterministic;
    R.seed = opts.seed;
    R.hypotheses = classify_hypotheses(I);
    record_uncertified(R);
    if (!R.certified && !opts.force)
        throw HypothesisError("classification '" + std::string(ideal_class_name(R.hypotheses.classification)) +
                              "': the colon formula is unproven here; pass force to compute "
                              "an uncertified candidate");
    const int ell = R.hypotheses.ell;

    UniversalSetup S = build_universal(I, ell, opts.seed, opts.variant == DetVariant::h_saturation);
    const Ctx& T = S.extended;

    std::vector<std::size_t> xidx;
    for (std::size_t i = S.x_begin; i < T->nvars(); ++i) xidx.push_back(i);

    // H = B : D, X eliminated, then the part at the origin: graded results
    // are their own origin part, zero-dimensional ones contract explicitly
    long long wmax = 1;
    for (long long w : C->weights()) wmax = std::max(wmax, w);
    const long long piece_cap = 4 * S.top_degree + 2 * wmax;
    auto downstream = [&](const Ideal& D) -> Ideal {
        // Free-module base: assemble the contraction degree by degree and
        // skip the extended-ring elimination, whose basis explodes past
        // three generators.  A quotient base has dependent monomials, so it
        // keeps the elimination route.
        if (S.graded && !C->is_quotient())
            if (auto G0 = graded_colon_zero_piece(S.B, D, C, piece_cap)) return *G0;
        Ideal H = ideal_colon(S.B, D);
        Ideal G = eliminate(H, xidx, C);
        if (S.graded) {
            bool forms = true;
            for (const Polynomial& g : G.gens())
                if (!g.is_zero() && !g.is_homogeneous()) {
                    forms = false;
                    break;
                }
            if (forms) return G;
        }
        if (G.dim() <= 0) return local_contraction_zero_dim(G);
        throw ShapeError("eliminated candidate is neither graded nor zero-dimensional; "
                         "no origin part can be extracted");
    };

    if (opts.variant == DetVariant::h_saturation) {
        Ideal hT(T, {C->lift_to(T, *S.h)});
        std::vector<Polynomial> liftedI;
        for (const Polynomial& g : I.gens()) liftedI.push_back(C->lift_to(T, g));
        Ideal D = ideal_colon(ideal_saturation(S.B, hT), Ideal(T, std::move(liftedI)));
        R.core = downstream(D);
        check_inside(R, I);
        return R;
    }

    int N;
    if (opts.exponent) {
        N = *opts.exponent;
        if (N < 1) throw InputError("colon exponent must be at least 1");
    } else if (mprim) {
        N = static_cast<int>(multiplicity(I, Rng::derive(opts.seed, "det-exponent", 0).next()));
    } else {
        ReductionCertificate cert = sample_general_reduction(
            I, ell, Rng::derive(opts.seed, "det-exponent", 1).next(), opts.sampling);
        N = cert.r + 1;
        R.certificates.push_back(std::move(cert));
    }
    R.exponent_used = N;

    // B : f^N via the colon chain B : f, (B : f) : f, ...; once one step
    // fixes the ideal every later step does too, so the chain value stands
    // in for all higher exponents (this also settles the N vs N+1 probe)
    Ideal D_N, D_N1;
    if (S.f.is_monomial()) {
        // Power-product f: the chain's limit B : f^∞ is a variable
        // saturation, and sat·f^N ⊆ B certifies the chain has stalled by
        // step N, making B : f^N and B : f^{N+1} both equal to it.  A
        // failed certificate means the pinned exponent sits below the
        // stall, and the literal chain takes over.
        Ideal sat = power_product_saturation(S.B, S.f, C);
        Polynomial fN = T->one();
        Polynomial fT1 = C->lift_to(T, S.f);
        for (int k = 0; k < N; ++k) fN = T->mul(fN, fT1);
        bool stalled = true;
        for (const Polynomial& g : sat.reduced_gens())
            if (!S.B.contains(T->mul(g, fN))) {
                stalled = false;
                break;
            }
        if (stalled) {
            D_N = sat;
            D_N1 = std::move(sat);
        }
    }
    if (!D_N.ctx()) {
        Ideal fT(T, {C->lift_to(T, S.f)});
        Ideal D = S.B;
        bool stable = false;
        for (int k = 1; k <= N + 1 && !stable; ++k) {
            Ideal next = ideal_colon(D, fT);
            stable = D.contains(next);
            if (!stable) D = std::move(next);
            if (k == N) D_N = D;
            if (k == N + 1) D_N1 = D;
        }
        if (!D_N.ctx()) D_N = D;
        if (!D_N1.ctx()) D_N1 = D;
    }

    Ideal core_N = downstream(D_N);
    bool agreed = true;
    if (!D_N.same_ideal(D_N1)) {
        Ideal core_N1 = downstream(D_N1);
        agreed = core_N.same_ideal(core_N1);
    }
    if (!agreed)
        throw ShapeError("colon exponent N=" + std::to_string(N) +
                         " disagrees with N+1; the exponent is below the stable range");
    R.core = std::move(core_N);
    check_inside(R, I);
    return R;
}

CoreResult core_both(const Ideal& I, const CoreOptions& opts) {
    CoreResult P = core_probabilistic(I, opts);
    CoreResult D = core_deterministic(I, opts);

    CoreResult R;
    R.method = CoreMethod::both;
    R.seed = opts.seed;
    R.hypotheses = P.hypotheses;
    R.certified = P.certified && D.certified;
    R.t_used = P.t_used;
    R.exponent_used = D.exponent_used;
    R.certificates = std::move(P.certificates);
    for (auto& c : D.certificates) R.certificates.push_back(std::move(c));
    R.checks = P.checks;
    for (const auto& [name, ok] : D.checks) {
        auto it = R.checks.find(name);
        if (it == R.checks.end())
            R.checks[name] = ok;
        else
            it->second = it->second && ok;
    }

    const bool agree = P.core && D.core && P.core->same_ideal(*D.core);
    R.checks["pipelines_agree"] = agree;
    if (agree) {
        R.core = std::move(P.core);
    } else {
        R.prob_candidate = std::move(P.core);
        R.det_candidate = std::move(D.core);
    }
    return R;
}

std::map<std::string, bool> verify_core(const Ideal& I, const Ideal& C, int d, int n_samples,
                                        std::uint64_t seed) {
    std::map<std::string, bool> out;
    const Ctx& ctx = I.ctx();
    auto run = [&](const char* name, auto&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const Error&) {
            ok = false;
        }
        out[name] = ok;
    };

    run("core_inside_ideal", [&] {
        for (const Polynomial& g : C.gens())
            if (!I.contains(g)) return false;
        return true;
    });

    run("radical_equal", [&] {
        for (const Polynomial& g : C.gens())
            if (!g.is_zero() && !radical_membership(g, I)) return false;
        for (const Polynomial& g : I.gens())
            if (!g.is_zero() && !radical_membership(g, C)) return false;
        return true;
    });

    // adjoint-style lower bound I^d ⊆ core; meaningful in polynomial
    // contexts only, where d is the ambient dimension
    if (!ctx->is_quotient())
        run("briancon_skoda", [&] {
            Ideal Id = ideal_power(I, static_cast<unsigned>(std::max(d, 0)));
            for (const Polynomial& g : Id.gens())
                if (!local_membership(g, C)) return false;
            return true;
        });

    run("inside_sampled_reductions", [&] {
        int ell = analytic_spread(I);
        for (int k = 0; k < n_samples; ++k) {
            std::uint64_t sub = Rng::derive(seed, "verify-sample", static_cast<std::uint64_t>(k)).next();
            ReductionCertificate cert = sample_general_reduction(I, ell, sub, {});
            for (const Polynomial& g : C.gens())
                if (!g.is_zero() && !local_membership(g, cert.J)) return false;
        }
        return true;
    });

    bool monomial = !ctx->is_quotient();
    for (const Polynomial& g : I.gens())
        if (!g.is_zero() && !g.is_monomial()) monomial = false;
    if (monomial)
        run("monomial_core", [&] {
            for (const Polynomial& g : C.reduced_gens())
                if (!g.is_monomial()) return false;
            return true;
        });

    if (graded_input(I))
        run("homogeneous_core", [&] {
            for (const Polynomial& g : C.reduced_gens())
                if (!g.is_zero() && !g.is_homogeneous()) return false;
            return true;
        });

    return out;
}

CurveFixtureReport curve_core_counterexample(std::uint64_t seed) {
    FieldSpec Q = FieldSpec::rationals();
    Ctx P = RingContext::polynomial_ring(Q, {"U", "V", "W"});
    Ctx R = P->with_quotient({P->parse("U^2 + V^2"), P->parse("V*W")});
    Polynomial u = R->variable(0), v = R->variable(1), w = R->variable(2);
    Ideal I(R, {u, v});

    CurveFixtureReport rep;
    rep.square = ideal_power(I, 2);
    Ideal meet = ideal_intersection(Ideal(R, {u}), Ideal(R, {v}));
    rep.meet_equals_square = meet.same_ideal(rep.square);
    if (!rep.meet_equals_square)
        throw InternalError("curve fixture: (u) ∩ (v) is not I^2");

    Rng rng = Rng::derive(seed, "curve-fixture", 0);
    rep.lambda = draw_nonzero(Q, rng);
    rep.mu = draw_nonzero(Q, rng);
    Polynomial g = R->add(R->mul(R->constant(rep.lambda), u), R->mul(R->constant(rep.mu), v));
    rep.sampled = Ideal(R, {g});
    rep.r = reduction_number(I, rep.sampled);
    if (rep.r != 1) throw InternalError("curve fixture: sampled reduction number is not 1");

    Polynomial uw = R->mul(u, w);
    rep.uw_locally_in_sampled = local_membership(uw, rep.sampled);
    if (!rep.uw_locally_in_sampled)
        throw InternalError("curve fixture: u*w missed the sampled one-generated reduction");
    rep.uw_in_square = local_membership(uw, rep.square);
    if (rep.uw_in_square)
        throw InternalError("curve fixture: u*w landed in I^2");
    // conclusion: every one-generated general reduction locally contains
    // u*w, yet the intersection of them all (= I^2) does not
    return rep;
}

} // namespace idealcore
