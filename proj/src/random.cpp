#include "qgrowth/random.hpp"

#include <cmath>

namespace qgrowth {

namespace {

// SplitMix64 finalizer; decorrelates nearby (seed, index) pairs.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomState::RandomState(std::uint64_t seed) : gen_(mix64(seed)) {}

RandomState RandomState::substream(std::uint64_t seed, std::uint64_t index) {
    return RandomState(mix64(seed) ^ mix64(index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

std::uint64_t RandomState::next_u64() { return gen_(); }

double RandomState::uniform() {
    // 53 random bits, offset by half an ulp so 0 and 1 are never returned.
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomState::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

}  // namespace qgrowth
