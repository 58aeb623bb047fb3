#pragma once

#include "circent/polycircle.hpp"

#include <cstdint>
#include <random>

namespace circent {

/// splitmix64 finalizer; used to derive independent per-instance seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) noexcept {
  return mix_seed(mix_seed(mix_seed(master) ^ a) ^ b);
}

/// Deterministic generator. The conversions below are written out so that
/// streams do not depend on the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  cplx unimodular();
  /// Uniform in the disk of radius `radius`.
  cplx in_disk(double radius);

 private:
  std::mt19937_64 engine_;
};

struct RandomPolyOptions {
  bool force_multiple = false;  // duplicate some roots
  int max_multiplicity = 3;
  bool normalize_scale = true;  // pick |leading| so that N(p) is in [1/4, 4]
};

CirclePoly random_circle_poly(Rng& rng, int n, const RandomPolyOptions& opts = {});

}  // namespace circent
