#include "dlap/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <limits>

#include "dlap/certify.hpp"
#include "dlap/error.hpp"

namespace dlap {

// -- AbelianGroup ------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<std::size_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw ValidationError("group needs at least one cyclic factor");
  strides_.assign(moduli_.size(), 1);
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    if (moduli_[j] < 2) throw ValidationError("cyclic factor Z" + std::to_string(moduli_[j]) + " must have order >= 2");
    strides_[j] = order_;
    order_ *= moduli_[j];
    exponent_ = std::lcm(exponent_, moduli_[j]);
    if (order_ > (std::size_t{1} << 24)) throw CapacityError("group order too large");
  }
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::vector<std::size_t> moduli;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != 'Z' && text[i] != 'z') throw ParseError(0, "group: expected 'Z' in '" + std::string(text) + "'");
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), m);
    if (ec != std::errc()) throw ParseError(0, "group: expected a modulus in '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    moduli.push_back(m);
    skip_space();
    if (i == text.size()) break;
    if (text[i] != 'x' && text[i] != 'X' && text[i] != '*') {
      throw ParseError(0, "group: expected 'x' between factors in '" + std::string(text) + "'");
    }
    ++i;
    skip_space();
  }
  if (moduli.empty()) throw ParseError(0, "group: empty description");
  return AbelianGroup(std::move(moduli));
}

AbelianGroup::Element AbelianGroup::element(std::size_t index) const {
  Element e(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) e[j] = (index / strides_[j]) % moduli_[j];
  return e;
}

std::size_t AbelianGroup::index(std::span<const std::size_t> coords) const {
  if (coords.size() != moduli_.size()) {
    throw ValidationError("element has " + std::to_string(coords.size()) + " coordinates, group " + name() +
                          " has rank " + std::to_string(moduli_.size()));
  }
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) idx += (coords[j] % moduli_[j]) * strides_[j];
  return idx;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const std::size_t x = (a / strides_[j]) % moduli_[j];
    const std::size_t y = (b / strides_[j]) % moduli_[j];
    idx += ((x + y) % moduli_[j]) * strides_[j];
  }
  return idx;
}

std::size_t AbelianGroup::negate(std::size_t a) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const std::size_t x = (a / strides_[j]) % moduli_[j];
    idx += ((moduli_[j] - x) % moduli_[j]) * strides_[j];
  }
  return idx;
}

std::string AbelianGroup::name() const {
  std::string s;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j) s += 'x';
    s += "Z" + std::to_string(moduli_[j]);
  }
  return s;
}

std::string AbelianGroup::element_string(std::size_t index) const {
  const auto e = element(index);
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(e[j]);
  }
  return s + ")";
}

// -- Character ---------------------------------------------------------------

Character::Character(const AbelianGroup& g, std::size_t index)
    : index_(index), exponent_(g.exponent()), phases_(g.order()) {
  if (index >= g.order()) throw ValidationError("character index out of range");
  const auto c = g.element(index);
  const auto& m = g.moduli();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) trivial_ = false;
    if ((2 * c[j]) % m[j] != 0) real_ = false;
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto e = g.element(v);
    std::size_t k = 0;
    for (std::size_t j = 0; j < e.size(); ++j) k += c[j] * e[j] * (exponent_ / m[j]);
    phases_[v] = k % exponent_;
  }
}

double Character::angle(std::size_t v) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(phases_[v]) / static_cast<double>(exponent_);
}

std::complex<double> Character::operator()(std::size_t v) const noexcept {
  const std::size_t k = phases_[v];
  // Exact values at the quarter turns keep real characters exactly real.
  if (k == 0) return {1.0, 0.0};
  if (2 * k == exponent_) return {-1.0, 0.0};
  if (4 * k == exponent_) return {0.0, 1.0};
  if (4 * k == 3 * exponent_) return {0.0, -1.0};
  const double a = angle(v);
  return {std::cos(a), std::sin(a)};
}

// -- SymmetricDVector --------------------------------------------------------

SymmetricDVector::SymmetricDVector(AbelianGroup group, std::vector<double> values, double tol)
    : group_(std::move(group)), values_(std::move(values)) {
  const std::size_t n = group_.order();
  if (values_.size() != n) throw ValidationError("d-vector length must equal the group order");
  std::vector<std::string> bad;
  if (values_[0] != 0.0) bad.push_back("d(0) = " + std::to_string(values_[0]) + ", expected 0");
  for (std::size_t v = 1; v < n; ++v) {
    if (!(values_[v] > 0.0) || !std::isfinite(values_[v])) {
      bad.push_back("d(" + group_.element_string(v) + ") is not positive");
    }
    const std::size_t w = group_.negate(v);
    if (values_[v] != values_[w]) {
      bad.push_back("d(" + group_.element_string(v) + ") != d(-" + group_.element_string(v) + ")");
    }
  }
  for (std::size_t u = 1; u < n && bad.size() < 32; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (values_[group_.add(u, v)] > values_[u] + values_[v] + tol) {
        bad.push_back("d(" + group_.element_string(u) + " + " + group_.element_string(v) +
                      ") exceeds d(" + group_.element_string(u) + ") + d(" + group_.element_string(v) + ")");
        break;
      }
    }
  }
  if (!bad.empty()) throw MetricError(std::move(bad));
  total_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

RealDistanceMatrix SymmetricDVector::distance_matrix() const {
  const std::size_t n = group_.order();
  std::vector<double> d(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) d[u * n + v] = values_[group_.subtract(v, u)];
  return RealDistanceMatrix(n, std::move(d));
}

// -- Graph construction ------------------------------------------------------

Graph cayley_graph(const AbelianGroup& g, std::span<const std::size_t> connection) {
  std::vector<std::size_t> conn(connection.begin(), connection.end());
  std::sort(conn.begin(), conn.end());
  conn.erase(std::unique(conn.begin(), conn.end()), conn.end());
  for (std::size_t s : conn) {
    if (s >= g.order()) throw ValidationError("connection element index out of range");
    if (s == 0) throw ValidationError("connection set contains the identity");
    if (!std::binary_search(conn.begin(), conn.end(), g.negate(s))) {
      throw ValidationError("connection set is not inverse-closed: " + g.element_string(s) + " lacks its inverse " +
                            g.element_string(g.negate(s)));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t s : conn) {
      const std::size_t v = g.add(u, s);
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), edges);
}

std::vector<std::size_t> parse_connection_set(const AbelianGroup& g, std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto number = [&]() -> std::size_t {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t x = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), x);
    if (ec != std::errc()) throw ParseError(0, "connection set: expected a number at offset " + std::to_string(i));
    i = static_cast<std::size_t>(ptr - text.data());
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return x;
  };
  skip();
  while (i < text.size()) {
    std::vector<std::size_t> coords;
    if (text[i] == '(') {
      ++i;
      while (true) {
        coords.push_back(number());
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError(0, "connection set: unterminated tuple");
      }
    } else {
      coords.push_back(number());
    }
    for (std::size_t j = 0; j < coords.size() && j < g.rank(); ++j) {
      if (coords[j] >= g.moduli()[j]) {
        throw ValidationError("connection element coordinate " + std::to_string(coords[j]) + " out of range for Z" +
                              std::to_string(g.moduli()[j]));
      }
    }
    out.push_back(g.index(coords));
    skip();
  }
  if (out.empty()) throw ParseError(0, "connection set is empty");
  return out;
}

SymmetricDVector dvector_from_graph(const AbelianGroup& g, const Graph& graph) {
  if (graph.order() != g.order()) throw Error("graph order does not match group " + g.name());
  require_connected(graph);
  const auto& base = graph.neighbors(0);
  for (std::size_t u = 0; u < g.order(); ++u) {
    std::vector<std::size_t> shifted;
    shifted.reserve(base.size());
    for (std::size_t s : base) shifted.push_back(g.add(u, s));
    std::sort(shifted.begin(), shifted.end());
    if (shifted != graph.neighbors(u)) {
      throw Error("graph is not a Cayley graph of " + g.name() + ": neighborhood of " + g.element_string(u) +
                  " is not a translate of the identity's");
    }
  }
  const auto dist = bfs_distances(graph, 0);
  std::vector<double> values(dist.begin(), dist.end());
  try {
    return SymmetricDVector(g, std::move(values));
  } catch (const MetricError& e) {
    throw Error(std::string("internal error: Cayley distances violate d-vector invariants: ") + e.what());
  }
}

// -- Spectra -----------------------------------------------------------------

std::vector<CharacterEigenvalue> character_eigenvalues(const SymmetricDVector& d) {
  const AbelianGroup& g = d.group();
  const std::size_t n = g.order();
  const double t0 = d.transmission();
  if (!(t0 > 0.0)) throw ValidationError("d-vector has zero transmission");
  std::vector<CharacterEigenvalue> out;
  out.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    const Character chi(g, c);
    std::complex<double> sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) sum += d[v] * chi(v);
    if (std::abs(sum.imag()) / t0 > 1e-10) {
      throw Error("character sum has imaginary part " + std::to_string(sum.imag() / t0) +
                  "; the d-vector is not symmetric");
    }
    out.push_back({c, 1.0 - sum.real() / t0});
  }
  return out;
}

Spectrum cayley_spectrum(const SymmetricDVector& d) {
  Spectrum s;
  for (const auto& ce : character_eigenvalues(d)) s.eigenvalues.push_back(ce.value);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  s.tolerance = 1e-10;
  return s;
}

// -- C_1 ---------------------------------------------------------------------

double c1_quartic(double x) noexcept { return (((4.0 * x - 4.0) * x - 31.0) * x - 20.0) * x + 4.0; }

double c1_constant() {
  double lo = 3.0;
  double hi = 4.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (c1_quartic(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double verified_c1() {
  static const double value = [] {
    const double root = c1_constant();
    const double form = ab_optimum().value;
    if (std::abs(root - form) > 1e-10) {
      throw Error("C_1 cross-check failed: quartic root " + std::to_string(root) + " vs quadratic-form maximum " +
                  std::to_string(form));
    }
    return root;
  }();
  return value;
}

// -- Character-sum margins ---------------------------------------------------

RealCharacterWitness real_character_margin(const SymmetricDVector& d, const Character& chi) {
  if (chi.trivial()) throw ValidationError("real_character_margin needs a nontrivial character");
  if (!chi.is_real()) throw ValidationError("real_character_margin needs chi^2 = 1; use complex_character_margin");
  const std::size_t n = d.group().order();
  RealCharacterWitness w;
  bool have_u0 = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (chi.phase(v) == 0) {
      ++w.plus_count;
      w.plus_sum += d[v];
    } else {
      ++w.minus_count;
      w.minus_sum += d[v];
      if (!have_u0 || d[v] < d[w.u0]) {
        w.u0 = v;
        have_u0 = true;
      }
    }
  }
  w.margin = 4.0 * w.minus_sum - 2.0 * w.plus_sum;
  w.shifted_bound = static_cast<double>(w.minus_count) * d[w.u0] + w.minus_sum;
  return w;
}

double complex_character_margin(const SymmetricDVector& d, const Character& chi) {
  if (chi.trivial()) throw ValidationError("complex_character_margin needs a nontrivial character");
  if (chi.is_real()) throw ValidationError("complex_character_margin needs chi^2 != 1; use real_character_margin");
  const double c1 = verified_c1();
  std::complex<double> sum = 0.0;
  for (std::size_t v = 0; v < d.group().order(); ++v) sum += d[v] * (1.0 - c1 * chi(v));
  if (std::abs(sum.imag()) > 1e-10 * (1.0 + d.transmission())) {
    throw Error("complex_character_margin: imaginary residue " + std::to_string(sum.imag()));
  }
  return sum.real();
}

CheckReport check_cayley_bounds(const Spectrum& s, const AbelianGroup& g, double tol) {
  CheckReport r;
  if (s.eigenvalues.size() < 2) return r;
  const double gap = s.eigenvalues[1];
  r.at_least("abelian Cayley gap >= 2/3", gap, kTwoThirds, tol);
  if (g.order() % 2 == 1) {
    r.strictly_above("odd-order abelian Cayley gap > 0.718", gap, kOddCayleyGapFloor, 0.0,
                     "1 - 1/C_1 = " + std::to_string(1.0 - 1.0 / verified_c1()));
  }
  return r;
}

// -- Random instances --------------------------------------------------------

std::vector<std::size_t> random_connection_set(const AbelianGroup& g, std::size_t min_size, SplitMix64& rng) {
  const std::size_t n = g.order();
  if (n < 2) throw ValidationError("connection sets need a group of order >= 2");
  min_size = std::min(std::max<std::size_t>(min_size, 1), n - 1);
  // Add random inverse pairs until the set is large enough and generates the
  // group; the full set of nonidentity elements always does.
  std::vector<bool> in(n, false);
  std::size_t count = 0;
  while (true) {
    const std::size_t s = 1 + rng.below(n - 1);
    if (in[s]) continue;
    for (std::size_t x : {s, g.negate(s)}) {
      if (!in[x]) {
        in[x] = true;
        ++count;
      }
    }
    if (count < min_size) continue;
    std::vector<std::size_t> conn;
    for (std::size_t x = 1; x < n; ++x)
      if (in[x]) conn.push_back(x);
    if (is_connected(cayley_graph(g, conn))) return conn;
  }
}

SymmetricDVector random_dvector(const AbelianGroup& g, SplitMix64& rng) {
  const std::size_t n = g.order();
  const std::size_t size = 1 + rng.below(std::max<std::size_t>(1, std::min<std::size_t>(n - 1, 6)));
  const auto conn = random_connection_set(g, size, rng);
  std::vector<double> weight(n, 0.0);
  for (std::size_t s : conn) {
    if (weight[s] == 0.0) weight[s] = weight[g.negate(s)] = rng.uniform(0.25, 2.0);
  }
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0.0;
  pq.push({0.0, 0});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du > dist[u]) continue;
    for (std::size_t s : conn) {
      const std::size_t v = g.add(u, s);
      const double nd = du + weight[s];
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  // Shortest-path sums can break exact symmetry in the last bit; average with
  // the inverse so d(v) = d(-v) holds exactly.
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t w = g.negate(v);
    if (v < w) dist[v] = dist[w] = 0.5 * (dist[v] + dist[w]);
  }
  double scale = 0.0;
  for (double x : dist) scale = std::max(scale, x);
  return SymmetricDVector(g, std::move(dist), 1e-12 * scale);
}

}  // namespace dlap
