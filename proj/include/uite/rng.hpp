#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace uite {

// One splitmix64 step. Also the mixing primitive for substream derivation.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for the (purpose, index) substream of a master seed. Distinct
// purposes and indices give independent streams, so e.g. adding arms does
// not perturb the feature draws of an existing cohort.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index = 0);

// Named variant for stage-level seeds; purpose is FNV-1a hashed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose, std::uint64_t index = 0);

// xoshiro256++ with explicit uniform/normal transforms. std:: distributions
// are implementation-defined and are not used anywhere in this project;
// every draw here is bit-reproducible for a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double uniform();

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double normal();
    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    // Index draw from a probability vector (assumed to sum to 1).
    int categorical(std::span<const double> probs);

  private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace uite
