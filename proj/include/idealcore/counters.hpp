#pragma once

#include <cstdint>

namespace idealcore {

// Work counters for the JSON report.  Thread-local so that concurrent
// pipeline runs (method = both) do not race; each run snapshots its own.
struct Counters {
    std::uint64_t gb_computations = 0;
    std::uint64_t pair_reductions = 0;
    std::uint64_t normal_forms = 0;
    std::uint64_t eliminations = 0;
    std::uint64_t colons = 0;
    std::uint64_t saturation_steps = 0;
    std::uint64_t reductions_sampled = 0;

    void reset() { *this = Counters{}; }
};

Counters& counters();

} // namespace idealcore
