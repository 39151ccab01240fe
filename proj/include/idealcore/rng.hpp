#pragma once

#include <cstdint>
#include <string_view>

namespace idealcore {

// Deterministic, platform-independent random stream (splitmix64).  The
// standard <random> distributions are implementation-defined, which would
// break the byte-identical-report guarantee, so sampling is done on raw
// 64-bit outputs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via rejection-free modulo; the bias for the
    // ranges used here (~2*10^4 out of 2^64) is far below any observable
    // effect and the method is identical on every platform.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Independent child stream; mixes a purpose tag so that e.g. the t-th
    // probabilistic sample and the t-th verification sample never collide.
    static Rng derive(std::uint64_t master, std::string_view purpose, std::uint64_t index) {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ master;
        for (char c : purpose) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        Rng r(h);
        r.next(); // discard one output to decorrelate nearby seeds
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace idealcore
