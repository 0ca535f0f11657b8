#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace phs {

/// splitmix64 finalizer; turns arbitrary 64-bit material into well-mixed seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Derive a child seed from a root seed, a textual label and an index.
/// Stable across runs and platforms; every suite and subcommand draws its
/// randomness from seeds derived this way, so trials are independently
/// reproducible.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index = 0);

/// mt19937_64 behind a fixed bit-to-double mapping. The engine is pinned by
/// the standard; the mappings below replace the implementation-defined
/// standard-library distributions, so streams are identical everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller on explicit uniforms.
    double gaussian();

    /// Standard complex Gaussian: radius from a chi draw, uniform phase.
    std::complex<double> complex_gaussian();

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace phs
