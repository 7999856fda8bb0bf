#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace dlap {

/// Dense symmetric n x n distance table, row-major. Construction only checks
/// the shape; metric axioms are checked by validate_metric. Graph distances
/// use the integer instantiation so every derived sum stays exact.
template <class T>
class DistanceMatrix {
 public:
  using value_type = T;

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<T> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != n_ * n_) throw std::invalid_argument("distance matrix must be n x n");
  }

  std::size_t size() const noexcept { return n_; }
  T operator()(std::size_t u, std::size_t v) const noexcept { return values_[u * n_ + v]; }
  std::span<const T> row(std::size_t u) const noexcept { return {values_.data() + u * n_, n_}; }
  std::span<const T> values() const noexcept { return values_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> values_;
};

using IntDistanceMatrix = DistanceMatrix<std::int64_t>;
using RealDistanceMatrix = DistanceMatrix<double>;

/// t[u] = sum_v d(u, v), in the matrix's own number type.
template <class T>
using TransmissionVector = std::vector<T>;

template <class T>
TransmissionVector<T> transmission(const DistanceMatrix<T>& d) {
  TransmissionVector<T> t(d.size(), T{0});
  for (std::size_t u = 0; u < d.size(); ++u) {
    for (T x : d.row(u)) t[u] += x;
  }
  return t;
}

RealDistanceMatrix to_real(const IntDistanceMatrix& d);

/// A validated finite metric. `exact` is present whenever every entry is an
/// integer (always, for graph-derived spaces), which unlocks exact Cheeger
/// arithmetic.
struct FiniteMetricSpace {
  RealDistanceMatrix real;
  std::optional<IntDistanceMatrix> exact;
  bool from_graph = false;

  std::size_t size() const noexcept { return real.size(); }
};

using RawMatrix = std::vector<std::vector<double>>;

/// Checks every metric axiom and reports all violations at once through
/// MetricError. Triangle checks allow `rel_tol * max|d|` slack, which is only
/// useful for floating-point closures.
FiniteMetricSpace validate_metric(const RawMatrix& m, double rel_tol = 0.0);
FiniteMetricSpace validate_metric(const IntDistanceMatrix& d, bool from_graph = false);

/// n lines of n comma-separated numbers.
RawMatrix parse_metric_csv(std::string_view text);

}  // namespace dlap
