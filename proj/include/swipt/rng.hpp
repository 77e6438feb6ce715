#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace swipt::rng {

// Splittable counter-based generator (SplitMix64). Monte Carlo drivers derive
// one Stream per trial from (master seed, trial index), so trials are
// independent and can run in any order, serial or parallel.
class Stream {
 public:
  explicit Stream(std::uint64_t state) : state_(state) {}

  static Stream derive(std::uint64_t master_seed, std::uint64_t index) {
    return Stream(mix(mix(master_seed) + 0x9E3779B97F4A7C15ull * index));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform on [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double next_unit_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Two independent N(0, 1) variates (Box-Muller).
  void next_normal_pair(double& z0, double& z1) {
    const double r = std::sqrt(-2.0 * std::log(next_unit_open()));
    const double phi = 2.0 * std::numbers::pi * next_unit();
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
  }

  // Circularly symmetric complex Gaussian with E{|z|^2} = variance.
  std::complex<double> next_cgauss(double variance) {
    double z0, z1;
    next_normal_pair(z0, z1);
    const double s = std::sqrt(0.5 * variance);
    return {s * z0, s * z1};
  }

  // Exponential with the given rate (mean 1/rate).
  double next_exponential(double rate) { return -std::log(next_unit_open()) / rate; }

  // Uniform on [0, 2*pi).
  double next_phase() { return 2.0 * std::numbers::pi * next_unit(); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace swipt::rng
