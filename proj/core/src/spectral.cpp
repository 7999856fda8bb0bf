#include "dlap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dlap/error.hpp"

namespace dlap {

double SymmetricMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += a_[i * n_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

nlohmann::json to_json(const Spectrum& s) {
  return {{"eigenvalues", s.eigenvalues}, {"residual", s.residual}};
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

Spectrum eig_sym(const SymmetricMatrix& m, JacobiOptions opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("eig_sym: tolerance must be positive");
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double norm = m.frobenius_norm();
  const double target = opts.tol * norm;
  int sweep = 0;
  double off = off_diagonal_norm(a, n);
  while (off > target) {
    if (sweep == opts.max_sweeps) throw ConvergenceError(sweep, off);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = nkp;
          a[k * n + q] = a[q * n + k] = nkq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  Spectrum out;
  out.tolerance = opts.tol;
  out.eigenvalues.reserve(n);
  std::vector<std::vector<double>> vecs;
  vecs.reserve(n);
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a[idx * n + idx]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    vecs.push_back(std::move(col));
  }

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto mx = m.multiply(vecs[i]);
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double e = mx[k] - out.eigenvalues[i] * vecs[i][k];
      r += e * e;
    }
    residual = std::max(residual, std::sqrt(r));
  }
  out.residual = residual;
  out.eigenvectors = std::move(vecs);
  return out;
}

double spectral_gap(const Spectrum& s) {
  if (s.eigenvalues.size() < 2) throw ValidationError("spectral gap needs at least 2 eigenvalues");
  return s.eigenvalues[1];
}

template <class T>
SymmetricMatrix build_ndl(const DistanceMatrix<T>& d) {
  const std::size_t n = d.size();
  if (n < 2) throw ValidationError("normalized distance Laplacian needs n >= 2 (transmission is zero)");
  auto t = transmission(d);
  std::vector<double> root(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!(t[u] > T{0})) {
      throw ValidationError("vertex " + std::to_string(u) + " has nonpositive transmission");
    }
    root[u] = std::sqrt(static_cast<double>(t[u]));
  }
  SymmetricMatrix m(n);
  for (std::size_t u = 0; u < n; ++u) {
    m.set(u, u, 1.0);
    for (std::size_t v = u + 1; v < n; ++v) {
      m.set(u, v, -static_cast<double>(d(u, v)) / (root[u] * root[v]));
    }
  }
  return m;
}

template SymmetricMatrix build_ndl(const DistanceMatrix<std::int64_t>&);
template SymmetricMatrix build_ndl(const DistanceMatrix<double>&);

SymmetricMatrix build_classical_nl(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> inv_root(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) == 0) throw ValidationError("vertex " + std::to_string(u) + " is isolated");
    inv_root[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u)));
  }
  SymmetricMatrix m(n);
  for (std::size_t u = 0; u < n; ++u) {
    m.set(u, u, 1.0);
    for (std::size_t v : g.neighbors(u)) {
      if (u < v) m.set(u, v, -inv_root[u] * inv_root[v]);
    }
  }
  return m;
}

template <class T>
double rayleigh_quotient(const DistanceMatrix<T>& d, const TransmissionVector<T>& t,
                         std::span<const double> y) {
  const std::size_t n = d.size();
  if (y.size() != n || t.size() != n) throw std::invalid_argument("rayleigh_quotient: size mismatch");
  double den = 0.0;
  for (std::size_t u = 0; u < n; ++u) den += static_cast<double>(t[u]) * y[u] * y[u];
  if (std::all_of(y.begin(), y.end(), [](double x) { return x == 0.0; })) {
    throw ValidationError("rayleigh_quotient: zero vector");
  }
  double num = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      double diff = y[u] - y[v];
      num += static_cast<double>(d(u, v)) * diff * diff;
    }
  }
  return num / (2.0 * den);
}

template double rayleigh_quotient(const DistanceMatrix<std::int64_t>&,
                                  const TransmissionVector<std::int64_t>&, std::span<const double>);
template double rayleigh_quotient(const DistanceMatrix<double>&, const TransmissionVector<double>&,
                                  std::span<const double>);

Spectrum ndl_spectrum(const FiniteMetricSpace& space, JacobiOptions opts) {
  if (space.exact) return eig_sym(build_ndl(*space.exact), opts);
  return eig_sym(build_ndl(space.real), opts);
}

CheckReport check_spectrum_bounds(const Spectrum& s, std::size_t n, double tol) {
  CheckReport r;
  if (s.eigenvalues.empty()) return r;
  const double lo = s.eigenvalues.front();
  const double hi = s.eigenvalues.back();
  r.add({"smallest eigenvalue is zero", std::abs(lo) <= tol, lo, 0.0, tol - std::abs(lo), {}});
  r.at_most("largest eigenvalue <= 2", hi, 2.0, tol);
  if (n > 2) r.strictly_below("largest eigenvalue < 2 (n > 2, empirical)", hi, 2.0, tol);
  if (s.eigenvalues.size() >= 2) {
    r.at_least("gap >= (9-4*sqrt2)/7", s.eigenvalues[1], kMetricGapFloor, tol);
  }
  return r;
}

}  // namespace dlap
