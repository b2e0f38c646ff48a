#pragma once

#include <cstdint>
#include <random>

namespace qgrowth {

// Deterministic random source. All randomness in the library flows through
// this wrapper: uniforms are built from raw mt19937_64 words (never through
// implementation-defined std distributions), so a fixed seed reproduces the
// same stream on every run of the same binary. Substreams keyed by
// (seed, index) make parallel generation order-independent.
class RandomState {
public:
    explicit RandomState(std::uint64_t seed);

    // Independent substream for item `index` of a run seeded with `seed`.
    static RandomState substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform();  // open interval (0, 1)
    double normal();   // standard normal (Box-Muller pair, one value cached)

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qgrowth
