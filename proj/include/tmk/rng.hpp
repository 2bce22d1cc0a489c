// SPDX-License-Identifier: Apache-2.0

#ifndef TMK_RNG_HPP
#define TMK_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace tmk {

/// splitmix64 of a 64-bit word. Used to derive child seeds and stateless
/// per-key decisions (e.g. mock answer jitter).
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive 64-bit hash of a byte string (FNV-1a finished through
/// mix64). Stable across platforms.
std::uint64_t hash64(std::string_view bytes);

/// Combines a seed with a label, for deriving independent substreams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// Deterministic RNG. std::mt19937_64 for the raw stream, with hand-rolled
/// variate transforms so that sequences are identical on every platform
/// (std::uniform_real_distribution et al. are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller (deterministic, no cached spare).
    double normal();

    double normal(double mean, double sd) { return mean + sd * normal(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace tmk

#endif  // TMK_RNG_HPP
