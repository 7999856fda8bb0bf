#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlap/cayley.hpp"
#include "dlap/constants.hpp"
#include "dlap/metric.hpp"
#include "dlap/report.hpp"

namespace dlap {

/// sum_{u,v} (y_u^2 - (1 + 2 sqrt 2) y_u y_v + y_v^2) d(u,v) for a balanced y
/// (sum y = 0). Nonnegative on every metric.
double balanced_form(const RealDistanceMatrix& d, std::span<const double> y);

/// f(a, b, c) = (a^2 - (1 + 2 sqrt 2) a b + b^2) c^2 + a b c (a + b).
/// f(a, b, c) + f(a, c, b) = (a b + a c - sqrt 2 b c)^2.
double f_weight(double alpha, double beta, double gamma) noexcept;

/// Weights mu(u, v, w) for combining triangle inequalities
/// d(u,v) + d(u,w) - d(v,w) >= 0 into sum_{u,v} z(u,v) d(u,v) >= 0.
struct WeightScheme {
  std::size_t n = 0;
  std::function<double(std::size_t, std::size_t, std::size_t)> mu;
  std::function<double(std::size_t, std::size_t)> z;

  /// mu(u,v,w) = f(y_u, y_v, y_w), z(u,v) = y_u^2 - (1 + 2 sqrt 2) y_u y_v + y_v^2.
  static WeightScheme from_vector(std::vector<double> y);
};

struct WeightSchemeReport {
  double symmetry_error = 0.0;       // (i)   max |mu(u,v,w) - mu(v,u,w)|
  double pair_min = 0.0;             // (ii)  min mu(u,v,w) + mu(u,w,v)
  std::array<std::size_t, 3> pair_argmin{};
  double row_sum_error = 0.0;        // (iii) max |sum_w mu(u,v,w) - z(u,v)|
  double target = 0.0;               // sum_{u,v} z(u,v) d(u,v)
  double triangle_combination = 0.0; // sum (mu(u,v,w)+mu(u,w,v))/2 * (d(u,v)+d(u,w)-d(v,w))
  std::size_t pair_violations = 0;
  std::vector<std::array<std::size_t, 3>> violating_triples;  // first few
  CheckReport checks;

  bool passed() const noexcept { return checks.passed(); }
};

/// Checks conditions (i)-(iii) on every triple and the final inequality.
WeightSchemeReport verify_weight_scheme(const RealDistanceMatrix& d, const WeightScheme& scheme,
                                        double tol = 1e-10);
/// Same, for the f-based scheme built from a unit, balanced y.
WeightSchemeReport verify_weight_scheme(const RealDistanceMatrix& d, std::span<const double> y,
                                        double tol = 1e-10);

/// Parameters (A, B) of the trigonometric certificate for odd-order
/// characters; the angles come from the character itself.
struct TrigCertificate {
  double A = 0.0;
  double B = 0.0;
};

/// g(a, b) = (A + B cos(a + b) - B (cos a + cos b) / sqrt 2)^2.
double g_value(const TrigCertificate& cert, double alpha, double beta) noexcept;

/// (1/|G|) sum_v (2 g(phi, theta_v) - g(phi - theta_v, theta_v)) by direct summation.
double trig_identity_lhs(const TrigCertificate& cert, const AbelianGroup& g, const Character& chi, double phi);
/// (A^2 + B^2) - (2AB(1 + sqrt 2) + B^2 (sqrt 2 + 1/2)) cos phi.
double trig_identity_rhs(const TrigCertificate& cert, double phi) noexcept;
/// |lhs - rhs|; needs chi and chi^2 nontrivial.
double trig_identity_residual(const TrigCertificate& cert, const AbelianGroup& g, const Character& chi, double phi);

/// Q(A, B) = 2AB(1 + sqrt 2) + B^2 (sqrt 2 + 1/2).
double ab_form(double A, double B) noexcept;

struct ABOptimum {
  double A = 0.0;
  double B = 0.0;
  double value = 0.0;
};

/// Maximizer of Q on the unit circle, from the top eigenpair of its 2x2
/// matrix (A >= 0 orientation).
ABOptimum ab_optimum();

}  // namespace dlap
