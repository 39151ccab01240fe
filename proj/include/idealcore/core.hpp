#pragma once

#include <optional>

#include "idealcore/reduction.hpp"

namespace idealcore {

enum class CoreMethod { probabilistic, deterministic, both };
enum class DetVariant { f_power, h_saturation };

const char* core_method_name(CoreMethod m);
const char* det_variant_name(DetVariant v);

struct CoreOptions {
    std::uint64_t seed = 0;
    int t_max = 16; // probabilistic: reductions sampled before giving up
    SampleOptions sampling;
    DetVariant variant = DetVariant::f_power;
    std::optional<int> exponent; // deterministic colon exponent override
    // run even when the hypothesis classifier reports "unverified"
    // (the result is then labeled uncertified)
    bool force = false;
};

struct CoreResult {
    std::optional<Ideal> core; // empty only when cross-checking pipelines disagree
    CoreMethod method = CoreMethod::probabilistic;
    int t_used = 0;        // reductions intersected at stabilization
    int exponent_used = 0; // accepted colon exponent (f-power variant)
    std::uint64_t seed = 0;
    std::vector<ReductionCertificate> certificates;
    std::map<std::string, bool> checks;
    HypothesisReport hypotheses;
    bool certified = true;
    // populated when method = both and the pipelines disagree
    std::optional<Ideal> prob_candidate, det_candidate;
};

// The ambient stage for the universal-reduction colon formula: the context
// extended by one block of X variables per general combination, the ideal B
// of the generic combinations themselves, and verified nonzerodivisors.
struct UniversalSetup {
    Ctx extended;                    // base variables then the X block
    std::size_t x_begin = 0;         // index of the first X variable
    Ideal B;                         // ell generators, X-linear
    Polynomial f;                    // nonzerodivisor in I (base context)
    std::optional<Polynomial> h;     // nonzerodivisor in Fitt_ell(I) when requested
    bool graded = false;             // input weighted-homogeneous (incl. quotient)
    long long top_degree = 0;        // D: max generator degree (graded case)
};

UniversalSetup build_universal(const Ideal& I, int ell, std::uint64_t seed, bool want_h);

// Intersection of the origin parts of freshly sampled general reductions,
// grown one reduction at a time until adding another leaves it unchanged.
// m-primary inputs only.
CoreResult core_probabilistic(const Ideal& I, const CoreOptions& opts = {});

// The universal colon formula: D = B : f^N (or the h-saturation variant
// D = (B : h^inf) : I), H = B : D, then X-elimination and contraction to
// the origin.  N defaults to the multiplicity for m-primary inputs and to
// r+1 from a sampled reduction otherwise; results for N and N+1 must agree.
CoreResult core_deterministic(const Ideal& I, const CoreOptions& opts = {});

// Both pipelines with a cross-check; disagreement attaches both candidates.
CoreResult core_both(const Ideal& I, const CoreOptions& opts = {});

// Structural checks for a claimed core C of I (pass/fail map, never throws):
//   core_inside_ideal      C ⊆ I generator-wise
//   radical_equal          √C = √I by mutual radical membership
//   briancon_skoda         generators of I^d locally inside C (polynomial
//                          contexts only; d = ring dimension)
//   inside_sampled_reductions   C locally inside n_samples fresh reductions
//   monomial_core          (monomial I) reduced basis of C is monomial
//   homogeneous_core       (weighted-homogeneous I) C generated by forms
std::map<std::string, bool> verify_core(const Ideal& I, const Ideal& C, int d,
                                        int n_samples, std::uint64_t seed);

// The one-dimensional quotient fixture whose core is NOT an intersection of
// general one-generated ideals: I = (u, v) on k[U,V,W]/(U^2+V^2, VW).  The
// report witnesses core(I) = I^2 = (u) ∩ (v), exhibits uw inside a sampled
// one-generated reduction locally but outside I^2, and pins r_J = 1.
// Any failed assertion throws.
struct CurveFixtureReport {
    Ideal square;            // I^2 = (u) ∩ (v) = the core
    Ideal sampled;           // (lambda u + mu v)
    Coeff lambda, mu;        // both nonzero
    int r = 0;               // r_J(I) for the sampled reduction
    bool meet_equals_square = false;
    bool uw_locally_in_sampled = false;
    bool uw_in_square = false; // stays false: the separating element
};

CurveFixtureReport curve_core_counterexample(std::uint64_t seed = 0);

} // namespace idealcore
