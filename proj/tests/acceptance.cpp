// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Budgets are wall-clock seconds, pinned next to the criterion they bound.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "idealcore/core.hpp"
#include "idealcore/groebner.hpp"
#include "idealcore/jobspec.hpp"
#include "oracles.hpp"

using namespace idealcore;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kBudgetExample1 = 60.0;   // criterion 1
constexpr double kBudgetExample2 = 600.0;  // criterion 2
constexpr double kBudgetCurve = 30.0;      // criterion 3
constexpr double kBudgetAgreement = 900.0; // criterion 4

Ctx quv() { return RingContext::polynomial_ring(FieldSpec::rationals(), {"U", "V"}); }

Ideal mk(const Ctx& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(R->parse(s));
    return Ideal(R, std::move(ps));
}

// m-primary monomial ideal in two variables: pure powers of both variables
// (degrees 1..6) plus up to two mixed monomials, at most four generators.
Ideal random_monomial_ideal(const Ctx& R, Rng& rng) {
    std::vector<std::string> gens;
    gens.push_back("U^" + std::to_string(rng.uniform(1, 6)));
    gens.push_back("V^" + std::to_string(rng.uniform(1, 6)));
    const int extra = static_cast<int>(rng.uniform(0, 2));
    for (int i = 0; i < extra; ++i) {
        long long a = rng.uniform(1, 5);
        long long b = rng.uniform(1, 6 - a);
        gens.push_back("U^" + std::to_string(a) + "*V^" + std::to_string(b));
    }
    return mk(R, gens);
}

std::vector<std::pair<unsigned, unsigned>> exponent_points(const Ideal& I) {
    std::vector<std::pair<unsigned, unsigned>> pts;
    for (const Polynomial& g : I.reduced_gens()) {
        const Monomial& m = g.terms().front().m;
        pts.emplace_back(m.exp(0), m.exp(1));
    }
    return pts;
}

struct Accepted {
    Ideal input;
    Ideal core;
    std::string label;
};

void note(std::string& why, const std::string& msg) {
    if (!why.empty()) why += "; ";
    why += msg;
}

} // namespace

int main() {
    int failures = 0;
    std::vector<Accepted> accepted;
    std::vector<Ideal> agreement_inputs; // criterion 4 fixtures, reused by 8
    std::vector<Ideal> agreement_cores;

    auto criterion = [&](int idx, const char* label, double budget_s, auto&& body) {
        const auto t0 = Clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = body(why);
        } catch (const std::exception& e) {
            note(why, e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (budget_s > 0 && secs > budget_s) {
            ok = false;
            note(why, "over budget of " + std::to_string(budget_s) + " s");
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s (%.1f s%s)%s%s\n", ok ? "PASS" : "FAIL", idx, label,
                    secs, budget_s > 0 ? (", budget " + std::to_string(static_cast<int>(budget_s)) + " s").c_str() : "",
                    why.empty() ? "" : " -- ", why.c_str());
        std::fflush(stdout);
    };

    criterion(1, "core of (U^3, U*V^3, V^4) is (U^2, U*V, V^2)*I, both methods", kBudgetExample1,
              [&](std::string& why) {
                  Ctx R = quv();
                  Ideal I = mk(R, {"U^3", "U*V^3", "V^4"});
                  Ideal expected = ideal_product(mk(R, {"U^2", "U*V", "V^2"}), I);
                  CoreOptions opts;
                  opts.seed = 1;
                  CoreResult prob = core_probabilistic(I, opts);
                  CoreResult det = core_deterministic(I, opts);
                  bool ok = true;
                  if (!prob.core || !prob.core->same_ideal(expected)) {
                      note(why, "probabilistic core differs from the product form");
                      ok = false;
                  }
                  if (!det.core || !det.core->same_ideal(expected)) {
                      note(why, "deterministic core differs from the product form");
                      ok = false;
                  }
                  if (ok) accepted.push_back({I, *prob.core, "example 1"});
                  return ok;
              });

    criterion(2, "core of (U^3, U*V^2*W^2, V^3*W^3) is (U^2, U*V*W, V^2*W^2)*I, deterministic",
              kBudgetExample2, [&](std::string& why) {
                  Ctx R = RingContext::polynomial_ring(FieldSpec::rationals(), {"U", "V", "W"});
                  Ideal I = mk(R, {"U^3", "U*V^2*W^2", "V^3*W^3"});
                  Ideal expected = ideal_product(mk(R, {"U^2", "U*V*W", "V^2*W^2"}), I);
                  CoreOptions opts;
                  opts.seed = 1;
                  CoreResult det = core_deterministic(I, opts);
                  if (!det.core || !det.core->same_ideal(expected)) {
                      note(why, "deterministic core differs from the product form");
                      return false;
                  }
                  accepted.push_back({I, *det.core, "example 2"});
                  return true;
              });

    criterion(3, "singular-curve counterexample: meet, reductions, and the refusal path",
              kBudgetCurve, [&](std::string& why) {
                  bool ok = true;
                  for (std::uint64_t seed = 0; seed < 5; ++seed) {
                      CurveFixtureReport rep = curve_core_counterexample(seed);
                      if (!rep.meet_equals_square) {
                          note(why, "(u) meet (v) != I^2 at seed " + std::to_string(seed));
                          ok = false;
                      }
                      if (rep.r != 1) {
                          note(why, "reduction number != 1 at seed " + std::to_string(seed));
                          ok = false;
                      }
                      if (!rep.uw_locally_in_sampled || rep.uw_in_square) {
                          note(why, "u*w containment pattern wrong at seed " + std::to_string(seed));
                          ok = false;
                      }
                  }
                  Ctx P = RingContext::polynomial_ring(FieldSpec::rationals(), {"U", "V", "W"});
                  Ctx R = P->with_quotient({P->parse("U^2 + V^2"), P->parse("V*W")});
                  Ideal I = mk(R, {"U", "V"});
                  HypothesisReport hyp = classify_hypotheses(I);
                  if (hyp.gs.satisfied) {
                      note(why, "classifier failed to flag the G_1 violation");
                      ok = false;
                  }
                  RunOutcome out = run_job(parse_jobspec("ring Q[U,V,W] quotient [U^2+V^2, V*W]\n"
                                                         "ideal I = U, V\n"
                                                         "core --method prob --seed 2"));
                  if (out.exit_code != 3) {
                      note(why, "refusal exit code was " + std::to_string(out.exit_code) +
                                    ", expected 3");
                      ok = false;
                  }
                  return ok;
              });

    criterion(4, "probabilistic and deterministic cores agree on 20 random m-primary monomial ideals",
              kBudgetAgreement, [&](std::string& why) {
                  Ctx R = quv();
                  int agreements = 0;
                  for (int case_i = 0; case_i < 20; ++case_i) {
                      Rng rng = Rng::derive(2026, "acceptance-agreement", case_i);
                      Ideal I = random_monomial_ideal(R, rng);
                      CoreOptions opts;
                      opts.seed = 100 + static_cast<std::uint64_t>(case_i);
                      CoreResult prob = core_probabilistic(I, opts);
                      CoreResult det = core_deterministic(I, opts);
                      if (prob.core && det.core && prob.core->same_ideal(*det.core)) {
                          ++agreements;
                          agreement_inputs.push_back(I);
                          agreement_cores.push_back(*prob.core);
                          accepted.push_back({I, *prob.core, "agreement case " + std::to_string(case_i)});
                      } else {
                          note(why, "case " + std::to_string(case_i) + " disagrees");
                      }
                  }
                  if (agreements != 20)
                      note(why, std::to_string(agreements) + "/20 agreements");
                  return agreements == 20;
              });

    criterion(5, "invariant suite holds on every accepted core", 0, [&](std::string& why) {
        bool ok = true;
        std::uint64_t seed = 0;
        for (const Accepted& a : accepted) {
            const int d = static_cast<int>(a.input.ctx()->nvars());
            auto checks = verify_core(a.input, a.core, d, 5, 7000 + seed++);
            for (const auto& [name, pass] : checks)
                if (!pass) {
                    note(why, a.label + ": " + name);
                    ok = false;
                }
        }
        if (accepted.empty()) {
            note(why, "no accepted cores to verify");
            ok = false;
        }
        return ok;
    });

    criterion(6, "multiplicity matches the Newton-polyhedron oracle on 20 random ideals", 0,
              [&](std::string& why) {
                  Ctx R = quv();
                  bool ok = true;
                  if (multiplicity(mk(R, {"U^2", "U*V", "V^3"}), 1) != 5) {
                      note(why, "e(U^2, U*V, V^3) != 5");
                      ok = false;
                  }
                  if (multiplicity(mk(R, {"U^2", "V^2"}), 1) != 4) {
                      note(why, "e(U^2, V^2) != 4");
                      ok = false;
                  }
                  for (int case_i = 0; case_i < 20; ++case_i) {
                      Rng rng = Rng::derive(2026, "acceptance-multiplicity", case_i);
                      Ideal I = random_monomial_ideal(R, rng);
                      const long long computed = multiplicity(I, 300 + case_i);
                      const long long expected =
                          static_cast<long long>(oracles::newton_multiplicity(exponent_points(I)));
                      if (computed != expected) {
                          note(why, "case " + std::to_string(case_i) + ": got " +
                                        std::to_string(computed) + ", oracle " +
                                        std::to_string(expected));
                          ok = false;
                      }
                  }
                  return ok;
              });

    criterion(7, "kernel property families, 1000 randomized cases each", 0, [&](std::string& why) {
        bool ok = true;
        Ctx R2 = quv();
        Ctx R3 = RingContext::polynomial_ring(FieldSpec::rationals(), {"U", "V", "W"});

        // ring axioms
        {
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                Rng rng = Rng::derive(11, "axioms", i);
                const Ctx& R = (i % 3 == 0) ? R3 : R2;
                Polynomial a = oracles::rand_poly(R, rng, 4, 3);
                Polynomial b = oracles::rand_poly(R, rng, 4, 3);
                Polynomial c = oracles::rand_poly(R, rng, 4, 3);
                if (!(R->add(R->add(a, b), c) == R->add(a, R->add(b, c))) ||
                    !(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c))) ||
                    !(R->mul(a, b) == R->mul(b, a)) || !R->sub(a, a).is_zero())
                    ++bad;
            }
            if (bad) {
                note(why, std::to_string(bad) + " ring-axiom failures");
                ok = false;
            }
        }

        // normal-form idempotence against a rotating set of bases
        {
            std::vector<GroebnerBasis> bases;
            for (auto gens : {std::vector<std::string>{"U^2 - V", "V^2 - U"},
                              std::vector<std::string>{"U^3", "U*V", "V^4"},
                              std::vector<std::string>{"U^2*V - 1"}}) {
                std::vector<Polynomial> ps;
                for (const auto& s : gens) ps.push_back(R2->parse(s));
                bases.push_back(buchberger(R2, std::move(ps), R2->canonical_order()));
            }
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                Rng rng = Rng::derive(12, "normal-form", i);
                Polynomial f = oracles::rand_poly(R2, rng, 5, 4);
                const GroebnerBasis& G = bases[i % bases.size()];
                Polynomial r = normal_form(f, G);
                if (!(normal_form(r, G) == r)) ++bad;
            }
            if (bad) {
                note(why, std::to_string(bad) + " normal-form idempotence failures");
                ok = false;
            }
        }

        // membership vs. Gaussian elimination on the graded piece
        {
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                Rng rng = Rng::derive(13, "membership", i);
                const Ctx& R = (i % 2 == 0) ? R2 : R3;
                const unsigned dg = static_cast<unsigned>(rng.uniform(1, 2));
                const unsigned df = static_cast<unsigned>(rng.uniform(dg, 4));
                auto nonzero_homog = [&](unsigned deg, int terms) {
                    Polynomial h;
                    while (h.terms().empty()) h = oracles::rand_homog(R, rng, deg, terms);
                    return h;
                };
                std::vector<Polynomial> gens;
                const int ngens = static_cast<int>(rng.uniform(1, 3));
                for (int g = 0; g < ngens; ++g) gens.push_back(nonzero_homog(dg, 3));
                Polynomial f = nonzero_homog(df, 3);
                if (rng.next() % 2 == 0) {
                    // half the cases are planted members
                    f = R->mul(gens[0], nonzero_homog(df - dg, 2));
                }
                bool via_basis = Ideal(R, gens).contains(f);
                bool via_linalg = oracles::member_by_linalg(R, gens, f);
                if (via_basis != via_linalg) ++bad;
            }
            if (bad) {
                note(why, std::to_string(bad) + " membership-oracle mismatches");
                ok = false;
            }
        }

        // intersection / colon / saturation identities
        {
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                Rng rng = Rng::derive(14, "ideal-ops", i);
                Polynomial p = oracles::rand_poly(R2, rng, 3, 3, false);
                Polynomial q = oracles::rand_poly(R2, rng, 3, 3, false);
                Polynomial g = oracles::rand_poly(R2, rng, 2, 2, false);
                Ideal I(R2, {p, q});
                Ideal J(R2, {q, g});
                Ideal Ig = ideal_colon(I, Ideal(R2, {g}));
                bool fine = true;
                for (const Polynomial& h : Ig.reduced_gens())
                    if (!I.contains(R2->mul(g, h))) fine = false;
                Ideal S = ideal_saturation(I, Ideal(R2, {g}));
                if (!ideal_saturation(S, Ideal(R2, {g})).same_ideal(S)) fine = false;
                Ideal M = ideal_intersection(I, J);
                Polynomial f = R2->mul(p, q);
                bool in_meet = M.contains(f);
                if (in_meet != (I.contains(f) && J.contains(f))) fine = false;
                for (const Polynomial& h : M.reduced_gens())
                    if (!I.contains(h) || !J.contains(h)) fine = false;
                if (!fine) ++bad;
            }
            if (bad) {
                note(why, std::to_string(bad) + " ideal-identity failures");
                ok = false;
            }
        }

        // syzygy rows annihilate the generator vector
        {
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                Rng rng = Rng::derive(15, "syzygy", i);
                std::vector<Polynomial> gens;
                const int ngens = static_cast<int>(rng.uniform(2, 3));
                for (int g = 0; g < ngens; ++g)
                    gens.push_back(oracles::rand_poly(R2, rng, 2, 2, false));
                SyzygyMatrix syz = syzygies(R2, gens);
                for (const auto& row : syz.rows) {
                    Polynomial s;
                    for (std::size_t j = 0; j < gens.size(); ++j)
                        s = R2->add(s, R2->mul(row[j], gens[j]));
                    if (!s.is_zero()) ++bad;
                }
            }
            if (bad) {
                note(why, std::to_string(bad) + " nonzero syzygy contractions");
                ok = false;
            }
        }
        return ok;
    });

    criterion(8, "same seed gives byte-identical reports; new seeds give the same ideals", 0,
              [&](std::string& why) {
                  bool ok = true;
                  const std::vector<std::string> jobs = {
                      "ring Q[U,V]\nideal I = U^3, U*V^3, V^4\ncore --method both --seed 7 --json",
                      "ring Q[U,V,W]\nideal I = U^3, U*V^2*W^2, V^3*W^3\n"
                      "core --method det --seed 7 --json",
                      "ring Q[U,V,W] quotient [U^2+V^2, V*W]\nideal I = U, V\n"
                      "core --method prob --seed 7 --json",
                  };
                  for (const std::string& text : jobs) {
                      RunOutcome a = run_job(parse_jobspec(text));
                      RunOutcome b = run_job(parse_jobspec(text));
                      a.report.erase("timing_ms");
                      b.report.erase("timing_ms");
                      if (a.report.dump() != b.report.dump()) {
                          note(why, "report bytes differ for a repeated seed");
                          ok = false;
                      }
                  }
                  Ctx R2 = quv();
                  CoreOptions reseeded;
                  reseeded.seed = 9001;
                  Ideal I1 = mk(R2, {"U^3", "U*V^3", "V^4"});
                  Ideal expected1 = ideal_product(mk(R2, {"U^2", "U*V", "V^2"}), I1);
                  CoreResult p1 = core_both(I1, reseeded);
                  if (!p1.core || !p1.core->same_ideal(expected1)) {
                      note(why, "example 1 core moved under a new seed");
                      ok = false;
                  }
                  Ctx R3 = RingContext::polynomial_ring(FieldSpec::rationals(), {"U", "V", "W"});
                  CoreResult p2 = core_deterministic(mk(R3, {"U^3", "U*V^2*W^2", "V^3*W^3"}), reseeded);
                  Ideal expected2 = ideal_product(mk(R3, {"U^2", "U*V*W", "V^2*W^2"}),
                                                  mk(R3, {"U^3", "U*V^2*W^2", "V^3*W^3"}));
                  if (!p2.core || !p2.core->same_ideal(expected2)) {
                      note(why, "example 2 core moved under a new seed");
                      ok = false;
                  }
                  for (std::size_t i = 0; i < agreement_inputs.size(); ++i) {
                      CoreOptions o;
                      o.seed = 5000 + i;
                      CoreResult r = core_probabilistic(agreement_inputs[i], o);
                      if (!r.core || !r.core->same_ideal(agreement_cores[i])) {
                          note(why, "agreement case " + std::to_string(i) +
                                        " core moved under a new seed");
                          ok = false;
                      }
                  }
                  if (agreement_inputs.empty()) {
                      note(why, "criterion 4 produced no fixtures to re-seed");
                      ok = false;
                  }
                  return ok;
              });

    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
