#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "idealcore/ring.hpp"

namespace idealcore {

// One batch job: a ring, named ideals, and a single command with options.
// parse_jobspec canonicalizes every polynomial through the ring context, so
// parse -> print -> parse is the identity on the structure.
struct JobSpec {
    // ring statement
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<long long> weights;          // always explicit after parsing
    std::vector<std::string> quotient;       // canonical polynomial strings

    // ideal statements, in declaration order; commands other than `ops`
    // operate on the first one
    std::vector<std::pair<std::string, std::vector<std::string>>> ideals;

    // command statement
    std::string command;                 // core|spread|reduction|multiplicity|verify|ops
    std::vector<std::string> op_args;    // ops calculator tokens, canonicalized

    // flags
    std::string method = "both";         // prob|det|both
    std::uint64_t seed = 0;
    int t_max = 16;
    int r_max = 20;
    std::optional<int> exponent;
    std::string variant = "fpower";      // fpower|hsat
    bool force = false;
    bool json = false;

    bool operator==(const JobSpec&) const = default;
};

// Statements separated by ';' or newlines:
//   ring <Q|Fp<p>>[v1,...] [weights [w1,...]] [quotient [g1,...]]
//   ideal <name> = p1, p2, ...
//   <command> [--flags]
// Errors carry line:column positions.
JobSpec parse_jobspec(const std::string& text);

std::string print_jobspec(const JobSpec& job);

// Rebuilds the ring context a parsed job describes.
Ctx job_context(const JobSpec& job);

struct RunOutcome {
    nlohmann::ordered_json report;
    std::string text;   // human rendering of the same content
    int exit_code = 0;  // 0 ok, 1 input, 2 shape/resource, 3 hypothesis, 4 internal
};

// Executes the job and assembles the report (fixed key order: input,
// hypotheses, result, checks, timing_ms, counters).  Engine errors are
// captured into the report and the exit code; only report assembly itself
// can throw.
RunOutcome run_job(const JobSpec& job);

} // namespace idealcore
