#include "doctest.h"

#include "idealcore/jobspec.hpp"

using namespace idealcore;
using nlohmann::ordered_json;

namespace {

// timing varies run to run; everything else must be reproducible
ordered_json stable(const RunOutcome& out) {
    ordered_json j = out.report;
    j.erase("timing_ms");
    return j;
}

std::vector<std::string> gen_strings(const ordered_json& arr) {
    std::vector<std::string> v;
    for (const auto& g : arr) v.push_back(g.get<std::string>());
    return v;
}

} // namespace

TEST_CASE("job parsing: ring, ideal, and command statements") {
    JobSpec job = parse_jobspec(
        "ring Q[U,V]\n"
        "ideal I = U^2, U*V, V^3\n"
        "core --method both --seed 7");
    CHECK(job.field.str() == "Q");
    CHECK(job.vars == std::vector<std::string>{"U", "V"});
    CHECK(job.weights == std::vector<long long>{1, 1});
    CHECK(job.quotient.empty());
    REQUIRE(job.ideals.size() == 1);
    CHECK(job.ideals[0].first == "I");
    CHECK(job.ideals[0].second.size() == 3);
    CHECK(job.command == "core");
    CHECK(job.method == "both");
    CHECK(job.seed == 7);
    CHECK(job.t_max == 16);
    CHECK(job.r_max == 20);
    CHECK_FALSE(job.exponent.has_value());
    CHECK_FALSE(job.force);

    // semicolons separate statements just like newlines
    JobSpec semi = parse_jobspec("ring Q[U,V]; ideal I = U^2, U*V, V^3; core --method both --seed 7");
    CHECK(semi == job);

    JobSpec quot = parse_jobspec(
        "ring Q[U,V,W] quotient [U^2+V^2, V*W]\n"
        "ideal I = U, V\n"
        "core --method prob --force --t-max 4");
    CHECK(quot.quotient.size() == 2);
    CHECK(quot.force);
    CHECK(quot.t_max == 4);

    JobSpec wts = parse_jobspec("ring Fp101[U,V] weights [3,2]\nideal I = U^2\nspread");
    CHECK(wts.field.str() == "Fp101");
    CHECK(wts.weights == std::vector<long long>{3, 2});
}

TEST_CASE("job parsing: diagnostics carry line and column") {
    auto message = [](const std::string& text) {
        try {
            parse_jobspec(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message("ring Q[U,V]\nideal I =\ncore").starts_with("2:"));
    CHECK(message("ring Q[U,V]\nideal I = U^2\nbogus --json").starts_with("3:"));
    CHECK_THROWS_AS(parse_jobspec("ring Q[U,V\nideal I = U\ncore"), InputError);
    // non-prime modulus
    CHECK_THROWS_AS(parse_jobspec("ring Fp91[U]\nideal I = U\ncore"), InputError);
    // weight count mismatch
    CHECK(message("ring Q[U,V] weights [1]\nideal I = U\ncore").find("1 weights for 2") !=
          std::string::npos);
    // empty generator list
    CHECK(message("ring Q[U,V]\nideal I =\ncore").find("at least one generator") !=
          std::string::npos);
    // unknown flag
    CHECK_THROWS_AS(parse_jobspec("ring Q[U]\nideal I = U\ncore --fast"), InputError);
    // one command per job
    CHECK(message("ring Q[U]\nideal I = U\ncore\nspread").find("one command") !=
          std::string::npos);
    // undeclared ideal in ops
    CHECK_THROWS_AS(parse_jobspec("ring Q[U]\nops gb J"), InputError);
    // commands do not take positional arguments
    CHECK_THROWS_AS(parse_jobspec("ring Q[U]\nideal I = U\ncore (U)"), InputError);
    // ring must come first
    CHECK_THROWS_AS(parse_jobspec("ideal I = U\nring Q[U]\ncore"), InputError);
    CHECK_THROWS_AS(parse_jobspec("ring Q[U]\ncore"), InputError);
}

TEST_CASE("job parsing: print then reparse is the identity") {
    std::vector<std::string> texts = {
        "ring Q[U,V]\nideal I = U^2, U*V, V^3\ncore --method both --seed 7",
        "ring Q[U,V,W] quotient [U^2+V^2, V*W]\nideal I = U, V\ncore --method prob --force",
        "ring Fp13[U,V] weights [3,2]\nideal I = U^2 - V^3\nspread --json",
        "ring Q[U,V]\nideal I = U^2, V^2\nverify --method det --variant hsat --exponent 3",
        "ring Q[U,V]\nideal A = U\nideal B = V\nops intersect A B",
        "ring Q[U,V]\nops colon (U^2*V) (U*V)",
    };
    for (const std::string& text : texts) {
        CAPTURE(text);
        JobSpec first = parse_jobspec(text);
        std::string printed = print_jobspec(first);
        JobSpec second = parse_jobspec(printed);
        CHECK(first == second);
        CHECK(print_jobspec(second) == printed);
    }
}

TEST_CASE("run_job: core report has the fixed envelope") {
    JobSpec job = parse_jobspec(
        "ring Q[U,V]\nideal I = U^2, U*V, V^2\ncore --method both --seed 11");
    RunOutcome out = run_job(job);
    CHECK(out.exit_code == 0);

    const ordered_json& rep = out.report;
    std::vector<std::string> keys;
    for (const auto& [k, v] : rep.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"input", "hypotheses", "result", "checks",
                                           "timing_ms", "counters"});

    CHECK(rep["input"]["command"] == "core");
    CHECK(rep["hypotheses"]["classification"] == "m-primary");
    CHECK(rep["result"]["method"] == "both");
    CHECK(rep["result"]["seed"] == 11);
    CHECK(rep["result"]["t_used"].is_number());
    CHECK(rep["result"]["exponent_used"].is_number());
    CHECK(rep["result"]["certified"] == true);
    // core of the squared maximal ideal is its cube
    CHECK(gen_strings(rep["result"]["generators"]) ==
          std::vector<std::string>{"V^3", "U*V^2", "U^2*V", "U^3"});
    CHECK(rep["checks"]["pipelines_agree"] == true);
    CHECK(rep["checks"]["core_inside_ideal"] == true);
    CHECK(rep["counters"]["gb_computations"].get<std::uint64_t>() > 0);

    CHECK(out.text.find("generators:") != std::string::npos);
    CHECK(out.text.find("pipelines_agree: pass") != std::string::npos);
}

TEST_CASE("run_job: verify appends the claimed-core checks") {
    JobSpec job = parse_jobspec(
        "ring Q[U,V]\nideal I = U^2, V^2\nverify --method prob --seed 5");
    RunOutcome out = run_job(job);
    CHECK(out.exit_code == 0);
    const ordered_json& checks = out.report["checks"];
    for (const char* key : {"core_inside_ideal", "radical_equal", "briancon_skoda",
                            "inside_sampled_reductions", "monomial_core", "homogeneous_core"})
        CHECK(checks.at(key) == true);
}

TEST_CASE("run_job: exit codes follow the error taxonomy") {
    // hypothesis gate: the singular-curve ideal violates G_1, prob refuses
    JobSpec curve = parse_jobspec(
        "ring Q[U,V,W] quotient [U^2+V^2, V*W]\n"
        "ideal I = U, V\n"
        "core --method prob --seed 2");
    RunOutcome refused = run_job(curve);
    CHECK(refused.exit_code == 3);
    CHECK(refused.report["error"]["kind"] == "hypothesis");
    CHECK(refused.report["hypotheses"]["gs_satisfied"] == false);
    CHECK(refused.report["result"].is_null());

    // forced past the gate, the shape gate rejects the non-m-primary input
    JobSpec forced = parse_jobspec(
        "ring Q[U,V,W] quotient [U^2+V^2, V*W]\n"
        "ideal I = U, V\n"
        "core --method prob --seed 2 --force");
    RunOutcome shaped = run_job(forced);
    CHECK(shaped.exit_code == 2);
    CHECK(shaped.report["error"]["kind"] == "shape");

    // forced deterministic run hits the zerodivisor wall instead
    JobSpec det = parse_jobspec(
        "ring Q[U,V,W] quotient [U^2+V^2, V*W]\n"
        "ideal I = U, V\n"
        "core --method det --seed 2 --force");
    RunOutcome walled = run_job(det);
    CHECK(walled.exit_code == 2);
    CHECK(walled.report["error"]["kind"] == "resource");

    // malformed polynomial surfaces as an input error at run time
    JobSpec bad = parse_jobspec("ring Q[U,V]\nideal I = U^2\nops gb (U^2)");
    bad.op_args[1] = "(U^^2)";
    RunOutcome input = run_job(bad);
    CHECK(input.exit_code == 1);
    CHECK(input.report["error"]["kind"] == "input");
}

TEST_CASE("run_job: same seed gives byte-identical reports") {
    const std::string text =
        "ring Q[U,V]\nideal I = U^3, U*V^3, V^4\ncore --method both --seed 42 --json";
    RunOutcome a = run_job(parse_jobspec(text));
    RunOutcome b = run_job(parse_jobspec(text));
    CHECK(a.exit_code == 0);
    CHECK(stable(a).dump() == stable(b).dump());

    RunOutcome c = run_job(parse_jobspec(
        "ring Q[U,V]\nideal I = U^3, U*V^3, V^4\ncore --method both --seed 424242 --json"));
    CHECK(stable(c)["result"]["generators"] == stable(a)["result"]["generators"]);
}

TEST_CASE("run_job: ops calculator") {
    auto run = [](const std::string& text) { return run_job(parse_jobspec(text)); };

    RunOutcome meet = run("ring Q[U,V]\nops intersect (U) (V)");
    CHECK(meet.exit_code == 0);
    CHECK(gen_strings(meet.report["result"]["generators"]) ==
          std::vector<std::string>{"U*V"});

    RunOutcome gb = run("ring Q[U,V]\nops gb (U^2 - V, V^2 - U)");
    CHECK(gen_strings(gb.report["result"]["generators"]).size() >= 2);

    RunOutcome colon = run("ring Q[U,V]\nops colon (U^2*V) (U)");
    CHECK(gen_strings(colon.report["result"]["generators"]) ==
          std::vector<std::string>{"U*V"});

    RunOutcome sat = run("ring Q[U,V]\nops saturate (U^3*V) (U)");
    CHECK(gen_strings(sat.report["result"]["generators"]) == std::vector<std::string>{"V"});

    RunOutcome elim = run("ring Q[U,V,T]\nops eliminate (T^2 - U, T^3 - V) [T]");
    CHECK(gen_strings(elim.report["result"]["generators"]) ==
          std::vector<std::string>{"U^3 - V^2"});

    RunOutcome rad = run("ring Q[U,V]\nops radical-member (U*V) (U^2*V^3)");
    CHECK(rad.report["result"]["value"] == true);
    RunOutcome notrad = run("ring Q[U,V]\nops radical-member (U + V) (U^2*V^3)");
    CHECK(notrad.report["result"]["value"] == false);

    RunOutcome dim = run("ring Q[U,V]\nops dim (U)");
    CHECK(dim.report["result"]["value"] == 1);
    RunOutcome vdim = run("ring Q[U,V]\nops vdim (U^2, V^3)");
    CHECK(vdim.report["result"]["value"] == 6);

    RunOutcome fit = run("ring Q[U,V]\nideal I = U^2, U*V, V^2\nops fitting I 2");
    CHECK_FALSE(gen_strings(fit.report["result"]["generators"]).empty());

    // eliminate needs a polynomial context
    RunOutcome qelim =
        run("ring Q[U,V] quotient [U^2 - V^3]\nops eliminate (U) [V]");
    CHECK(qelim.exit_code == 1);
}

TEST_CASE("run_job: spread, multiplicity, and reduction commands") {
    RunOutcome spread =
        run_job(parse_jobspec("ring Q[U,V]\nideal I = U^2, U*V, V^3\nspread"));
    CHECK(spread.exit_code == 0);
    CHECK(spread.report["result"]["analytic_spread"] == 2);

    RunOutcome mult =
        run_job(parse_jobspec("ring Q[U,V]\nideal I = U^2, U*V, V^3\nmultiplicity --seed 9"));
    CHECK(mult.exit_code == 0);
    CHECK(mult.report["result"]["multiplicity"] == 5);
    CHECK(mult.report["result"]["seed"] == 9);

    RunOutcome red =
        run_job(parse_jobspec("ring Q[U,V]\nideal I = U^2, U*V, V^2\nreduction --seed 3"));
    CHECK(red.exit_code == 0);
    CHECK(red.report["result"]["r"].is_number());
    CHECK(red.report["result"]["combinations"].size() == 2);
    CHECK_FALSE(red.report["result"]["transcript"].empty());
    for (const auto& row : red.report["result"]["combinations"])
        CHECK(row.size() == 3);
}
