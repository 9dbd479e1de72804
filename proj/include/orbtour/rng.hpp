// Deterministic random number generation.
//
// All stochastic components (SA chains, DE islands) draw from their own Rng
// stream derived from a master seed, so runs replay bit-exactly regardless of
// scheduling. Distribution sampling is hand-rolled on top of std::mt19937_64
// because the standard distribution classes are implementation-defined.
#pragma once

#include <cstdint>
#include <random>

namespace orbtour {

// SplitMix64 step, used to whiten seeds and derive independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derive the seed of a named substream (stage, chain, island, ...).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Requires n > 0.
    std::size_t index(std::size_t n) {
        // Modulo bias is below 2^-50 for the population sizes used here.
        return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
    }

    // Uniform integer in [lo, hi] inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)));
    }

    bool chance(double p) { return uniform() < p; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace orbtour
