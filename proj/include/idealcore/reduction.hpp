#pragma once

#include "idealcore/ideal.hpp"
#include "idealcore/rng.hpp"

namespace idealcore {

// Dimension of the fiber cone of I: the number of general combinations a
// minimal reduction needs.  Computed from the Rees relation ideal (eliminate
// t from (Y_j - t f_j)), with the ring variables then sent to 0; m-primary
// ideals of a polynomial context shortcut to the ring dimension.
int analytic_spread(const Ideal& I);

// dim(ring) - dim(ring/K); in quotient contexts both terms are dimensions
// over the ambient ring modulo the defining ideal
int ideal_height(const Ideal& K);

// proper with every variable in the radical
bool is_m_primary(const Ideal& I);

struct MembershipCheck {
    Polynomial element; // a generator of I^power
    unsigned power;
    bool member; // local membership in J * I^(power-1) observed
};

struct ReductionCertificate {
    Ideal J;
    // lambda[l][j]: the l-th generator of J is sum_j lambda[l][j] * f_j
    std::vector<std::vector<Coeff>> lambda;
    int r = 0; // least r with I^(r+1) = J I^r locally
    std::uint64_t seed = 0;
    // all passing checks at the found r, preceded by one failure witness at
    // r-1 when r > 0; replayable through local_membership
    std::vector<MembershipCheck> transcript;
};

struct SampleOptions {
    int r_max = 20;
    int attempts = 5;
};

// J generated by `ell` random combinations of I's generators, verified to be
// a reduction; fresh coefficients are drawn (up to the attempt budget) when
// verification fails.  Coefficient pool: integers in [-10^4, 10^4] over Q,
// the whole field in prime mode.
ReductionCertificate sample_general_reduction(const Ideal& I, int ell, std::uint64_t seed,
                                              const SampleOptions& opts = {});

// least r <= r_max with every generator of I^(r+1) locally inside J I^r;
// J must sit inside I.  No such r -> ResourceError.
int reduction_number(const Ideal& I, const Ideal& J, int r_max = 20);

// Hilbert-Samuel multiplicity of an m-primary ideal: the length of R modulo
// a general parameter reduction (dim-many combinations), taken at the
// origin.  Two independent samples must agree.
long long multiplicity(const Ideal& I, std::uint64_t seed = 0);

struct GsCheck {
    bool satisfied = true;
    // (i, height of Fitt_i) for ht(I) <= i <= s-1; empty range is vacuously
    // satisfied
    std::vector<std::pair<std::size_t, int>> fitting_heights;
};

// G_s: the minimal generator count of I at any prime of height < s stays
// within that height; checked as ht Fitt_i(I) >= i+1 over the index range.
GsCheck check_G_s(const Ideal& I, std::size_t s);

enum class IdealClass { m_primary, equimultiple, g_ell_verified, hypotheses_unverified };

const char* ideal_class_name(IdealClass c);

struct HypothesisReport {
    int ell = 0;
    int height = 0;
    GsCheck gs; // evaluated at s = ell
    IdealClass classification = IdealClass::hypotheses_unverified;
    std::vector<std::string> warnings;
};

HypothesisReport classify_hypotheses(const Ideal& I);

} // namespace idealcore
