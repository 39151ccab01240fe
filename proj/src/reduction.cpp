#include "idealcore/reduction.hpp"

#include <algorithm>

#include "idealcore/counters.hpp"

namespace idealcore {

namespace {

constexpr long kPoolRadius = 10000; // rational-mode sampling pool [-10^4, 10^4]

Coeff draw_coeff(const FieldSpec& field, Rng& rng) {
    if (field.kind == FieldKind::prime)
        return Coeff::from_long(static_cast<long>(rng.uniform(0, static_cast<long long>(field.p) - 1)),
                                field);
    return Coeff::from_long(static_cast<long>(rng.uniform(-kPoolRadius, kPoolRadius)), field);
}

std::size_t matrix_rank(std::vector<std::vector<Coeff>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Coeff inv = m[rank][c].inv();
        for (std::size_t cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Coeff f = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// random combinations rows x gens; resampled rows are the caller's business
std::vector<std::vector<Coeff>> draw_matrix(const FieldSpec& field, Rng& rng,
                                            std::size_t rows, std::size_t cols) {
    std::vector<std::vector<Coeff>> m(rows, std::vector<Coeff>(cols));
    for (auto& row : m)
        for (auto& e : row) e = draw_coeff(field, rng);
    return m;
}

std::vector<Polynomial> combine(const Ctx& C, const std::vector<Polynomial>& gens,
                                const std::vector<std::vector<Coeff>>& lambda) {
    std::vector<Polynomial> out;
    for (const auto& row : lambda) {
        Polynomial p;
        for (std::size_t j = 0; j < gens.size(); ++j)
            p = C->add(p, C->mul(C->constant(row[j]), gens[j]));
        out.push_back(std::move(p));
    }
    return out;
}

int reduction_number_tr(const Ideal& I, const Ideal& J, int r_max,
                        std::vector<MembershipCheck>* transcript) {
    for (const Polynomial& g : J.gens())
        if (!I.contains(g)) throw InputError("reduction candidate is not contained in the ideal");

    Ideal Ipow = I; // I^(r+1) as r climbs
    MembershipCheck witness;
    bool have_witness = false;
    for (int r = 0; r <= r_max; ++r) {
        Ideal JIr = r == 0 ? J : ideal_product(J, ideal_power(I, static_cast<unsigned>(r)));
        Ipow = r == 0 ? I : ideal_product(Ipow, I);
        std::vector<MembershipCheck> passing;
        bool all = true;
        for (const Polynomial& g : Ipow.gens()) {
            bool in = local_membership(g, JIr);
            if (!in) {
                witness = {g, static_cast<unsigned>(r + 1), false};
                have_witness = true;
                all = false;
                break;
            }
            passing.push_back({g, static_cast<unsigned>(r + 1), true});
        }
        if (all) {
            if (transcript) {
                transcript->clear();
                if (r > 0) {
                    if (!have_witness)
                        throw InternalError("missing failure witness below the reduction number");
                    transcript->push_back(witness);
                }
                for (auto& c : passing) transcript->push_back(std::move(c));
            }
            return r;
        }
    }
    throw ResourceError("not verified as a reduction within r_max=" + std::to_string(r_max));
}

} // namespace

int ideal_height(const Ideal& K) {
    int ring_dim = Ideal(K.ctx(), {}).dim();
    return ring_dim - K.dim();
}

bool is_m_primary(const Ideal& I) {
    if (I.is_unit()) return false;
    const Ctx& C = I.ctx();
    for (std::size_t i = 0; i < C->nvars(); ++i)
        if (!radical_membership(C->variable(i), I)) return false;
    return true;
}

int analytic_spread(const Ideal& I) {
    const Ctx& C = I.ctx();
    if (I.is_unit() || I.is_zero_ideal())
        throw InputError("analytic spread needs a proper nonzero ideal");
    if (!C->is_quotient() && is_m_primary(I)) return static_cast<int>(C->nvars());

    const std::size_t nb = C->nvars();
    const std::size_t n = I.gens().size();
    std::vector<std::string> names = {C->fresh_name("t")};
    std::vector<long long> ws = {1};
    for (std::size_t j = 0; j < n; ++j) {
        names.push_back(C->fresh_name("Y_" + std::to_string(j + 1)));
        ws.push_back(1);
    }
    Ctx ext = C->extended(names, ws);
    Polynomial t = ext->variable(nb);
    std::vector<Polynomial> rel;
    for (std::size_t j = 0; j < n; ++j)
        rel.push_back(ext->sub(ext->variable(nb + 1 + j),
                               ext->mul(t, C->lift_to(ext, I.gens()[j]))));

    // contract away t to get the Rees relations in (ring vars, Y)
    std::vector<std::string> keep_names;
    std::vector<long long> keep_ws;
    std::vector<std::size_t> keep_idx;
    for (std::size_t i = 0; i < ext->nvars(); ++i)
        if (i != nb) {
            keep_names.push_back(ext->vars()[i]);
            keep_ws.push_back(ext->weights()[i]);
            keep_idx.push_back(i);
        }
    Ctx rees = RingContext::polynomial_ring(C->field(), keep_names, keep_ws);
    Ideal rel_ideal = eliminate(Ideal(ext, std::move(rel)), {nb}, rees);

    // fiber cone: kill the ring variables, keep the Y block
    std::vector<std::string> ynames(keep_names.begin() + nb, keep_names.end());
    std::vector<long long> yws(keep_ws.begin() + nb, keep_ws.end());
    Ctx fiber = RingContext::polynomial_ring(C->field(), ynames, yws);
    std::vector<std::size_t> yidx;
    for (std::size_t j = 0; j < n; ++j) yidx.push_back(nb + j);
    std::vector<Polynomial> fiber_gens;
    for (const Polynomial& g : rel_ideal.gens()) {
        Polynomial h = rees->restrict_vars(g, yidx, fiber);
        if (!h.is_zero()) fiber_gens.push_back(std::move(h));
    }
    return Ideal(fiber, std::move(fiber_gens)).dim();
}

int reduction_number(const Ideal& I, const Ideal& J, int r_max) {
    return reduction_number_tr(I, J, r_max, nullptr);
}

ReductionCertificate sample_general_reduction(const Ideal& I, int ell, std::uint64_t seed,
                                              const SampleOptions& opts) {
    const Ctx& C = I.ctx();
    const std::size_t n = I.gens().size();
    if (ell < 1 || static_cast<std::size_t>(ell) > n)
        throw InputError("reduction sampling needs 1 <= ell <= generator count");

    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        ++counters().reductions_sampled;
        Rng rng = Rng::derive(seed, "reduction-sample", static_cast<std::uint64_t>(attempt));
        auto lambda = draw_matrix(C->field(), rng, static_cast<std::size_t>(ell), n);
        if (matrix_rank(lambda) != static_cast<std::size_t>(ell)) continue;
        std::vector<Polynomial> jg = combine(C, I.gens(), lambda);
        if (std::any_of(jg.begin(), jg.end(),
                        [](const Polynomial& p) { return p.is_zero(); }))
            continue;
        Ideal J(C, std::move(jg));
        ReductionCertificate cert;
        try {
            cert.r = reduction_number_tr(I, J, opts.r_max, &cert.transcript);
        } catch (const ResourceError&) {
            continue; // not a reduction at these coefficients; redraw
        }
        cert.J = std::move(J);
        cert.lambda = std::move(lambda);
        cert.seed = seed;
        return cert;
    }
    throw ResourceError("no reduction found within r_max=" + std::to_string(opts.r_max) +
                        " after " + std::to_string(opts.attempts) + " samples");
}

long long multiplicity(const Ideal& I, std::uint64_t seed) {
    if (!is_m_primary(I)) throw ShapeError("multiplicity needs an m-primary ideal");
    const Ctx& C = I.ctx();
    const std::size_t d = static_cast<std::size_t>(Ideal(C, {}).dim());
    const std::size_t n = I.gens().size();
    if (n < d) throw ShapeError("m-primary ideal with fewer generators than the dimension");

    auto one_sample = [&](std::uint64_t which) -> long long {
        for (int attempt = 0; attempt < 5; ++attempt) {
            Rng rng = Rng::derive(seed, "multiplicity", which * 16 + attempt);
            auto lambda = draw_matrix(C->field(), rng, d, n);
            if (matrix_rank(lambda) != d) continue;
            Ideal J(C, combine(C, I.gens(), lambda));
            if (J.dim() > 0) continue; // degenerate draw: not a parameter ideal
            return local_contraction_zero_dim(J).vdim();
        }
        throw ResourceError("multiplicity sampling kept drawing degenerate parameter ideals");
    };

    long long e1 = one_sample(0), e2 = one_sample(1);
    if (e1 != e2)
        throw ResourceError("multiplicity samples disagree (" + std::to_string(e1) + " vs " +
                            std::to_string(e2) + "); rerun with a different seed");
    return e1;
}

GsCheck check_G_s(const Ideal& I, std::size_t s) {
    if (s < 1) throw InputError("G_s needs s >= 1");
    GsCheck out;
    const std::size_t n = I.gens().size();
    const int ring_dim = Ideal(I.ctx(), {}).dim();
    int h = std::max(ideal_height(I), 0);
    for (std::size_t i = static_cast<std::size_t>(h); i < s; ++i) {
        int ht;
        if (i >= n) {
            ht = ring_dim + 1; // Fitt_i = (1) beyond the generator count
        } else {
            ht = ideal_height(fitting_ideal(I, i));
        }
        out.fitting_heights.push_back({i, ht});
        if (ht < static_cast<int>(i) + 1) out.satisfied = false;
    }
    return out;
}

const char* ideal_class_name(IdealClass c) {
    switch (c) {
        case IdealClass::m_primary: return "m-primary";
        case IdealClass::equimultiple: return "equimultiple";
        case IdealClass::g_ell_verified: return "G_ell-verified";
        case IdealClass::hypotheses_unverified: return "hypotheses-unverified";
    }
    return "?";
}

HypothesisReport classify_hypotheses(const Ideal& I) {
    HypothesisReport rep;
    rep.height = ideal_height(I);
    rep.ell = analytic_spread(I);
    rep.gs = check_G_s(I, static_cast<std::size_t>(std::max(rep.ell, 1)));
    if (is_m_primary(I)) {
        rep.classification = IdealClass::m_primary;
    } else if (rep.ell == rep.height) {
        rep.classification = IdealClass::equimultiple;
    } else if (rep.gs.satisfied) {
        rep.classification = IdealClass::g_ell_verified;
    } else {
        rep.classification = IdealClass::hypotheses_unverified;
    }
    if (I.ctx()->is_quotient())
        rep.warnings.push_back("height read off a quotient ring; assumes an equidimensional "
                               "catenary base");
    rep.warnings.push_back("residual S2 hypotheses are assumed, not verified");
    return rep;
}

} // namespace idealcore
