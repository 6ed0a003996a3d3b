/*
 * rng.hpp -- deterministic splittable random streams.
 *
 * Every stochastic draw in a run comes from streams derived from one
 * master seed, so a (scenario, seed) pair always replays bit-identically
 * and independent runs never share state.
 */
#pragma once

#include <cstdint>

namespace lrthr {

// SplitMix64 step (Steele, Lea, Flood): the usual seed expander.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    Rng() = default;
    explicit Rng(std::uint64_t seed) : seed0_(seed), state_(seed) {
        // burn one step so adjacent seeds decorrelate immediately
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1), 53-bit mantissa
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n), n > 0; Lemire multiply-shift
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Independent child stream; same (parent seed, salt) always yields the
    // same stream no matter how much the parent has already been consumed.
    Rng derive(std::uint64_t salt) const {
        std::uint64_t s = seed0_ ^ (salt * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL);
        splitmix64(s);
        return Rng(s);
    }

    std::uint64_t seed() const { return seed0_; }

  private:
    std::uint64_t seed0_ = 0;
    std::uint64_t state_ = 0;
};

// Counter-based expansion of a master seed into per-run seeds; run k's seed
// depends only on (master, k), so batches can skip or reorder runs freely.
inline std::uint64_t run_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master + index * 0x9E3779B97F4A7C15ULL;
    splitmix64(s);
    return s;
}

} // namespace lrthr
