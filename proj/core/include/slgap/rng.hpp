#pragma once

#include <cstdint>

namespace slgap {

/// Deterministic counter-splittable generator. A master seed plus a stream
/// counter always yields the same sequence, so parallel or reordered task
/// execution cannot perturb sampled results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Stream `stream` of master seed `master`; streams are independent.
  static SplitMix64 fork(std::uint64_t master, std::uint64_t stream) {
    return SplitMix64(mix(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1))));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Rejection-free modulo is fine at desk scale.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace slgap
