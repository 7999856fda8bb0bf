#include "dlap/certify.hpp"

#include <cmath>
#include <memory>

#include "dlap/error.hpp"
#include "dlap/spectral.hpp"

namespace dlap {

namespace {

void require_balanced(std::span<const double> y) {
  double sum = 0.0;
  double l1 = 0.0;
  for (double x : y) {
    sum += x;
    l1 += std::abs(x);
  }
  if (std::abs(sum) > 1e-12 * std::max(1.0, l1)) {
    throw ValidationError("vector is not balanced: sum = " + std::to_string(sum));
  }
}

}  // namespace

double balanced_form(const RealDistanceMatrix& d, std::span<const double> y) {
  if (y.size() != d.size()) throw std::invalid_argument("balanced_form: size mismatch");
  require_balanced(y);
  double total = 0.0;
  for (std::size_t u = 0; u < d.size(); ++u) {
    for (std::size_t v = 0; v < d.size(); ++v) {
      total += (y[u] * y[u] - kCrossCoefficient * y[u] * y[v] + y[v] * y[v]) * d(u, v);
    }
  }
  return total;
}

double f_weight(double a, double b, double c) noexcept {
  return (a * a - kCrossCoefficient * a * b + b * b) * c * c + a * b * c * (a + b);
}

WeightScheme WeightScheme::from_vector(std::vector<double> y) {
  WeightScheme s;
  s.n = y.size();
  auto shared = std::make_shared<const std::vector<double>>(std::move(y));
  s.mu = [shared](std::size_t u, std::size_t v, std::size_t w) {
    const auto& yy = *shared;
    return f_weight(yy[u], yy[v], yy[w]);
  };
  s.z = [shared](std::size_t u, std::size_t v) {
    const auto& yy = *shared;
    return yy[u] * yy[u] - kCrossCoefficient * yy[u] * yy[v] + yy[v] * yy[v];
  };
  return s;
}

WeightSchemeReport verify_weight_scheme(const RealDistanceMatrix& d, const WeightScheme& scheme, double tol) {
  const std::size_t n = d.size();
  if (scheme.n != n) throw std::invalid_argument("verify_weight_scheme: size mismatch");
  WeightSchemeReport r;
  bool first = true;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      double row = 0.0;
      for (std::size_t w = 0; w < n; ++w) {
        const double m = scheme.mu(u, v, w);
        row += m;
        r.symmetry_error = std::max(r.symmetry_error, std::abs(m - scheme.mu(v, u, w)));
        const double pair = m + scheme.mu(u, w, v);
        if (first || pair < r.pair_min) {
          r.pair_min = pair;
          r.pair_argmin = {u, v, w};
          first = false;
        }
        if (pair < -tol) {
          ++r.pair_violations;
          if (r.violating_triples.size() < 8) r.violating_triples.push_back({u, v, w});
        }
        r.triangle_combination += 0.5 * pair * (d(u, v) + d(u, w) - d(v, w));
      }
      const double z = scheme.z(u, v);
      r.row_sum_error = std::max(r.row_sum_error, std::abs(row - z));
      r.target += z * d(u, v);
    }
  }
  r.checks.at_most("(i) mu symmetric in its first two arguments", r.symmetry_error, 0.0, tol);
  std::string where = "worst triple (" + std::to_string(r.pair_argmin[0]) + "," + std::to_string(r.pair_argmin[1]) +
                      "," + std::to_string(r.pair_argmin[2]) + ")";
  r.checks.at_least("(ii) mu(u,v,w) + mu(u,w,v) >= 0", r.pair_min, 0.0, tol, where);
  r.checks.at_most("(iii) row sums equal z", r.row_sum_error, 0.0, tol);
  r.checks.at_least("sum z(u,v) d(u,v) >= 0", r.target, 0.0, kCheckTolerance);
  return r;
}

WeightSchemeReport verify_weight_scheme(const RealDistanceMatrix& d, std::span<const double> y, double tol) {
  require_balanced(y);
  double norm = 0.0;
  for (double x : y) norm += x * x;
  if (std::abs(norm - 1.0) > 1e-10) throw ValidationError("weight scheme needs a unit vector");
  return verify_weight_scheme(d, WeightScheme::from_vector({y.begin(), y.end()}), tol);
}

double g_value(const TrigCertificate& c, double alpha, double beta) noexcept {
  const double inner = c.A + c.B * std::cos(alpha + beta) - c.B * (std::cos(alpha) + std::cos(beta)) / kSqrt2;
  return inner * inner;
}

double trig_identity_lhs(const TrigCertificate& cert, const AbelianGroup& g, const Character& chi, double phi) {
  double sum = 0.0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const double theta = chi.angle(v);
    sum += 2.0 * g_value(cert, phi, theta) - g_value(cert, phi - theta, theta);
  }
  return sum / static_cast<double>(g.order());
}

double trig_identity_rhs(const TrigCertificate& c, double phi) noexcept {
  return (c.A * c.A + c.B * c.B) - ab_form(c.A, c.B) * std::cos(phi);
}

double trig_identity_residual(const TrigCertificate& cert, const AbelianGroup& g, const Character& chi, double phi) {
  if (chi.trivial() || chi.is_real()) {
    throw ValidationError("trig_identity_residual needs chi and chi^2 both nontrivial");
  }
  return std::abs(trig_identity_lhs(cert, g, chi, phi) - trig_identity_rhs(cert, phi));
}

double ab_form(double A, double B) noexcept {
  return 2.0 * A * B * (1.0 + kSqrt2) + B * B * kSqrt2PlusHalf;
}

ABOptimum ab_optimum() {
  SymmetricMatrix q(2);
  q.set(0, 0, 0.0);
  q.set(0, 1, 1.0 + kSqrt2);
  q.set(1, 1, kSqrt2PlusHalf);
  const Spectrum s = eig_sym(q);
  const auto& top = s.eigenvectors->back();
  double A = top[0];
  double B = top[1];
  if (A < 0.0 || (A == 0.0 && B < 0.0)) {
    A = -A;
    B = -B;
  }
  return {A, B, s.eigenvalues.back()};
}

}  // namespace dlap
