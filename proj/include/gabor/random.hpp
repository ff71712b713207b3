#pragma once

#include <cstdint>

#include "gabor/types.hpp"

namespace gabor {

// Reproducible random stream: 64-bit linear congruential generator with
// the Knuth MMIX constants
//   state <- state * 6364136223846793005 + 1442695040888963407
// feeding a Box-Muller transform. Every implementation of this scheme
// produces the same sequences for the same seed, so randomized
// experiments are exactly repeatable.
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform on (0, 1]; 53-bit resolution, never exactly zero.
    double uniform();

    // Standard normal via Box-Muller; draws are produced in pairs.
    double normal();

    // Circular complex Gaussian with E|z|^2 = 1. Consumes exactly two
    // uniforms per sample regardless of the normal() cache.
    cplx complex_gaussian();

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Length-L white complex Gaussian noise, unit variance per sample.
cvec complex_gaussian_vector(std::size_t length, std::uint64_t seed);

}  // namespace gabor
