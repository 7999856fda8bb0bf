#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dlap {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over <random> engines and
/// distributions because every draw here must be bit-identical across
/// standard libraries: the conversions to doubles, bounded integers and
/// normals are defined in this file rather than left to the implementation.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr const char* kAlgorithm = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Independent child stream keyed by `stream`; does not advance *this.
  SplitMix64 split(std::uint64_t stream) const noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n), unbiased. n must be positive.
  std::size_t below(std::size_t n) noexcept;
  bool bernoulli(double p) noexcept { return uniform() < p; }
  /// Standard normal via Box-Muller; consumes two draws per call.
  double normal() noexcept;

 private:
  std::uint64_t state_;
};

/// Finalizer of SplitMix64, usable as a 64-bit hash.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Standard-normal entries, mean subtracted, scaled to unit norm.
std::vector<double> random_balanced_unit(std::size_t n, SplitMix64& rng);

/// y minus its component along w.
std::vector<double> project_out(std::span<const double> y, std::span<const double> w);

}  // namespace dlap
