#include "dlap/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlap {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64::result_type SplitMix64::operator()() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

SplitMix64 SplitMix64::split(std::uint64_t stream) const noexcept {
  return SplitMix64(mix64(state_ ^ mix64(stream + 0x632be59bd9b4e019ULL)));
}

double SplitMix64::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::size_t SplitMix64::below(std::size_t n) noexcept {
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = (*this)();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

double SplitMix64::normal() noexcept {
  double u1 = uniform();
  const double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> random_balanced_unit(std::size_t n, SplitMix64& rng) {
  if (n < 2) throw std::invalid_argument("balanced vectors need n >= 2");
  std::vector<double> y(n);
  while (true) {
    double mean = 0.0;
    for (auto& x : y) {
      x = rng.normal();
      mean += x;
    }
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (auto& x : y) {
      x -= mean;
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm > 1e-8) {
      for (auto& x : y) x /= norm;
      return y;
    }
  }
}

std::vector<double> project_out(std::span<const double> y, std::span<const double> w) {
  double yw = 0.0;
  double ww = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    yw += y[i] * w[i];
    ww += w[i] * w[i];
  }
  std::vector<double> out(y.begin(), y.end());
  if (ww == 0.0) return out;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= yw / ww * w[i];
  return out;
}

}  // namespace dlap
