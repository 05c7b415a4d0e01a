#pragma once

// Deterministic random streams for the count simulations. Grid points get
// independent streams derived from the master seed through a 64-bit mix,
// so one point's draws never depend on another's.

#include <cstdint>
#include <random>

namespace holonomy {

std::uint64_t splitmix64(std::uint64_t x);

// Stream seed for (master, index): splitmix64(master ^ golden * (index + 1)).
std::uint64_t seed_mix(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// Poisson draw: inversion by sequential search for small means, Hormann's
// transformed-rejection (PTRS) above.
std::int64_t poisson(Rng& rng, double mean);

}  // namespace holonomy
