#pragma once

#include <cstdint>

namespace rwre {

/// Identifier of the seed-derivation scheme, embedded in report provenance.
/// A substream is keyed by (master seed, stream id, draw index): the three
/// words are folded into the initial state with the SplitMix64 finalizer,
/// after which the stream advances as plain SplitMix64. Identical keys give
/// bitwise identical sequences on every platform.
inline constexpr const char* kRngSchemeId = "splitmix64-streams-v1";

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace detail

class SubstreamRng {
public:
    explicit SubstreamRng(std::uint64_t master,
                          std::uint64_t stream = 0,
                          std::uint64_t draw = 0) {
        std::uint64_t s = detail::mix64(master + detail::kGolden);
        s = detail::mix64(s ^ (stream * 0xBF58476D1CE4E5B9ULL + 1));
        s = detail::mix64(s ^ (draw * 0x94D049BB133111EBULL + 2));
        state_ = s;
    }

    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + uniform01() * (b - a); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [0, n); n > 0. Fixed-point multiply, no rejection.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace rwre
