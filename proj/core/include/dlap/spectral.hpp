#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlap/constants.hpp"
#include "dlap/graph.hpp"
#include "dlap/metric.hpp"
#include "dlap/report.hpp"

namespace dlap {

/// Dense real symmetric matrix. Writes go through set(), which stores both
/// (i, j) and (j, i), so symmetry is exact.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  double frobenius_norm() const noexcept;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Eigen-decomposition of a symmetric matrix, eigenvalues ascending with
/// multiplicity. `eigenvectors[i]` pairs with `eigenvalues[i]`.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::optional<std::vector<std::vector<double>>> eigenvectors;
  /// max_i ||M x_i - lambda_i x_i||_2 (0 for closed-form spectra).
  double residual = 0.0;
  double tolerance = 0.0;

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

nlohmann::json to_json(const Spectrum& s);

struct JacobiOptions {
  double tol = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic Jacobi. Converged when the off-diagonal Frobenius norm drops to
/// tol * ||M||_F; throws ConvergenceError otherwise.
Spectrum eig_sym(const SymmetricMatrix& m, JacobiOptions opts = {});

/// Second entry of the ascending eigenvalue list (n >= 2).
double spectral_gap(const Spectrum& s);

/// T^{-1/2} (T - D) T^{-1/2}: unit diagonal, -d(u,v)/sqrt(t(u)t(v)) off it.
template <class T>
SymmetricMatrix build_ndl(const DistanceMatrix<T>& d);
extern template SymmetricMatrix build_ndl(const DistanceMatrix<std::int64_t>&);
extern template SymmetricMatrix build_ndl(const DistanceMatrix<double>&);

/// I - Deg^{-1/2} A Deg^{-1/2}. Throws on isolated vertices.
SymmetricMatrix build_classical_nl(const Graph& g);

/// sum over ordered pairs d(u,v)(y_u - y_v)^2 / (2 sum_u t(u) y_u^2).
template <class T>
double rayleigh_quotient(const DistanceMatrix<T>& d, const TransmissionVector<T>& t,
                         std::span<const double> y);
extern template double rayleigh_quotient(const DistanceMatrix<std::int64_t>&,
                                         const TransmissionVector<std::int64_t>&,
                                         std::span<const double>);
extern template double rayleigh_quotient(const DistanceMatrix<double>&,
                                         const TransmissionVector<double>&, std::span<const double>);

/// Spectrum of the normalized distance Laplacian of a metric space.
Spectrum ndl_spectrum(const FiniteMetricSpace& space, JacobiOptions opts = {});

/// Checks: smallest eigenvalue is 0, largest lies in [0, 2], largest is
/// strictly below 2 for n > 2 (empirical), and the gap clears
/// kMetricGapFloor.
CheckReport check_spectrum_bounds(const Spectrum& s, std::size_t n, double tol = kCheckTolerance);

}  // namespace dlap
