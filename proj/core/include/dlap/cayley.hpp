#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlap/constants.hpp"
#include "dlap/graph.hpp"
#include "dlap/metric.hpp"
#include "dlap/random.hpp"
#include "dlap/report.hpp"
#include "dlap/spectral.hpp"

namespace dlap {

/// Z_{m1} x ... x Z_{mk}. Elements are addressed by a mixed-radix index with
/// the last coordinate varying fastest; characters use the same indexing.
class AbelianGroup {
 public:
  using Element = std::vector<std::size_t>;

  explicit AbelianGroup(std::vector<std::size_t> moduli);
  /// "Z4", "Z2xZ2", "Z3xZ5" (case-insensitive 'z', 'x' or '*' separators).
  static AbelianGroup parse(std::string_view text);

  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  const std::vector<std::size_t>& moduli() const noexcept { return moduli_; }
  /// Least common multiple of the moduli: every character value is an
  /// exponent()-th root of unity.
  std::size_t exponent() const noexcept { return exponent_; }

  Element element(std::size_t index) const;
  /// Coordinates are reduced modulo their moduli.
  std::size_t index(std::span<const std::size_t> coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  std::size_t subtract(std::size_t a, std::size_t b) const { return add(a, negate(b)); }

  std::string name() const;
  std::string element_string(std::size_t index) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<std::size_t> moduli_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
  std::size_t exponent_ = 1;
};

/// chi_c(v) = exp(2 pi i sum_j c_j v_j / m_j). Phases are kept as exact
/// integers modulo the group exponent.
class Character {
 public:
  Character(const AbelianGroup& g, std::size_t index);

  std::size_t index() const noexcept { return index_; }
  /// k such that chi(v) = exp(2 pi i k / exponent).
  std::size_t phase(std::size_t v) const noexcept { return phases_[v]; }
  double angle(std::size_t v) const noexcept;
  std::complex<double> operator()(std::size_t v) const noexcept;

  bool trivial() const noexcept { return trivial_; }
  /// chi^2 = 1, i.e. real values in {-1, 1}.
  bool is_real() const noexcept { return real_; }

 private:
  std::size_t index_;
  std::size_t exponent_;
  std::vector<std::size_t> phases_;
  bool trivial_ = true;
  bool real_ = true;
};

/// A translation-invariant metric on a group viewed from the identity:
/// d(0) = 0, d(v) > 0 otherwise, d(v) = d(-v), d(u+v) <= d(u) + d(v).
class SymmetricDVector {
 public:
  /// Validates every invariant; `tol` is absolute slack for subadditivity.
  SymmetricDVector(AbelianGroup group, std::vector<double> values, double tol = 0.0);

  const AbelianGroup& group() const noexcept { return group_; }
  double operator[](std::size_t v) const noexcept { return values_[v]; }
  std::span<const double> values() const noexcept { return values_; }
  /// Constant transmission t_0 = sum_v d(v).
  double transmission() const noexcept { return total_; }
  /// d(u, v) = d(v - u).
  RealDistanceMatrix distance_matrix() const;

 private:
  AbelianGroup group_;
  std::vector<double> values_;
  double total_ = 0.0;
};

/// Cay(G, S): u ~ u + s. `connection` holds element indices; it must be
/// inverse-closed and avoid the identity.
Graph cayley_graph(const AbelianGroup& g, std::span<const std::size_t> connection);

/// Comma-separated elements: bare integers for cyclic groups, parenthesized
/// tuples otherwise, e.g. "1,3" or "(1,0),(0,1),(1,1)".
std::vector<std::size_t> parse_connection_set(const AbelianGroup& g, std::string_view text);

/// d(v) = graph distance from the identity. Throws if `graph` is not a
/// connected Cayley graph of `g` under the mixed-radix labelling.
SymmetricDVector dvector_from_graph(const AbelianGroup& g, const Graph& graph);

struct CharacterEigenvalue {
  std::size_t character = 0;
  double value = 0.0;
};

/// 1 - (1/t_0) sum_v d(v) chi(v) for every character, in character order.
/// Throws when an imaginary part exceeds 1e-10 (which signals d(v) != d(-v)).
std::vector<CharacterEigenvalue> character_eigenvalues(const SymmetricDVector& d);

/// Closed-form spectrum of the normalized distance Laplacian, ascending.
Spectrum cayley_spectrum(const SymmetricDVector& d);

/// Largest root of 4x^4 - 4x^3 - 31x^2 - 20x + 4, by bisection on [3, 4].
double c1_constant();
double c1_quartic(double x) noexcept;

/// C_1 after cross-checking the quartic root against the maximum of the
/// 2x2 quadratic form; throws if the two disagree by more than 1e-10.
/// Computed once per process.
double verified_c1();

struct RealCharacterWitness {
  double margin = 0.0;          // sum_v d_v (1 - 3 chi(v))
  std::size_t u0 = 0;           // argmin of d over chi^{-1}(-1)
  std::size_t plus_count = 0;   // |chi^{-1}(1)|
  std::size_t minus_count = 0;  // |chi^{-1}(-1)|
  double plus_sum = 0.0;        // sum of d over chi^{-1}(1)
  double minus_sum = 0.0;       // sum of d over chi^{-1}(-1)
  /// |minus| d_{u0} + minus_sum, the intermediate bound on plus_sum obtained
  /// by translating the minus class by u0.
  double shifted_bound = 0.0;
};

/// For a nontrivial real character: the margin plus the translation witness.
RealCharacterWitness real_character_margin(const SymmetricDVector& d, const Character& chi);

/// Re sum_v d_v (1 - C_1 chi(v)) for a nontrivial character with chi^2 != 1.
double complex_character_margin(const SymmetricDVector& d, const Character& chi);

/// gap >= 2/3 always; gap > 0.718 when the group order is odd.
CheckReport check_cayley_bounds(const Spectrum& s, const AbelianGroup& g, double tol = kCheckTolerance);

/// Random inverse-closed generating set with at least `min_size` elements.
std::vector<std::size_t> random_connection_set(const AbelianGroup& g, std::size_t min_size,
                                               SplitMix64& rng);

/// Translation-invariant metric from positive random weights on a random
/// inverse-closed generating set, closed under shortest paths.
SymmetricDVector random_dvector(const AbelianGroup& g, SplitMix64& rng);

}  // namespace dlap
