#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

dlap::Rational subset_value(const dlap::IntDistanceMatrix& d, std::uint64_t mask) {
  const std::size_t n = d.size();
  std::int64_t cross = 0, vol_s = 0, vol_c = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const bool in_u = (mask >> u) & 1u;
    for (std::size_t v = 0; v < n; ++v) {
      const bool in_v = (mask >> v) & 1u;
      if (in_u) vol_s += d(u, v);
      else vol_c += d(u, v);
      if (in_u && !in_v) cross += d(u, v);
    }
  }
  return dlap::Rational(cross, std::min(vol_s, vol_c));
}

}  // namespace

dlap::Rational naive_cheeger(const dlap::IntDistanceMatrix& d) {
  const std::size_t n = d.size();
  dlap::Rational best(std::numeric_limits<std::int32_t>::max());
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    best = std::min(best, subset_value(d, mask));
  }
  return best;
}

std::uint64_t naive_cheeger_ordered_ties(const dlap::IntDistanceMatrix& d) {
  const dlap::Rational best = naive_cheeger(d);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << d.size()); ++mask) {
    if (subset_value(d, mask) == best) ++count;
  }
  return count;
}

std::vector<std::vector<std::int64_t>> floyd_warshall(const dlap::Graph& g) {
  const std::size_t n = g.order();
  constexpr std::int64_t inf = std::numeric_limits<std::int32_t>::max();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

double direct_rayleigh(const std::vector<std::vector<double>>& d, const std::vector<double>& y) {
  double num = 0, den = 0;
  for (std::size_t u = 0; u < y.size(); ++u) {
    double t = 0;
    for (std::size_t v = 0; v < y.size(); ++v) {
      num += d[u][v] * (y[u] - y[v]) * (y[u] - y[v]);
      t += d[u][v];
    }
    den += t * y[u] * y[u];
  }
  return num / (2 * den);
}

std::array<double, 2> sym2_roots(double a, double b, double c) {
  const double mid = (a + c) / 2;
  const double r = std::hypot((a - c) / 2, b);
  return {mid - r, mid + r};
}

std::array<double, 3> sym3_roots(const std::array<std::array<double, 3>, 3>& m) {
  // Smith's closed form for symmetric 3x3 eigenvalues.
  const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
  const double q = (m[0][0] + m[1][1] + m[2][2]) / 3;
  if (p1 == 0) {
    std::array<double, 3> r{m[0][0], m[1][1], m[2][2]};
    std::sort(r.begin(), r.end());
    return r;
  }
  const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                    (m[2][2] - q) * (m[2][2] - q) + 2 * p1;
  const double p = std::sqrt(p2 / 6);
  std::array<std::array<double, 3>, 3> b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
  const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                     b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                     b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(det / 2, -1.0, 1.0);
  const double phi = std::acos(r) / 3;
  const double e1 = q + 2 * p * std::cos(phi);
  const double e3 = q + 2 * p * std::cos(phi + 2 * std::numbers::pi / 3);
  const double e2 = 3 * q - e1 - e3;
  std::array<double, 3> out{e1, e2, e3};
  std::sort(out.begin(), out.end());
  return out;
}

bool exhaustive_bipartite_extremal(const dlap::Graph& g, std::size_t budget) {
  const std::size_t n = g.order();
  const std::size_t m = n / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m) continue;
    bool ok = true;
    std::size_t inside_b = 0;
    for (std::size_t u = 0; u < n && ok; ++u) {
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        const bool au = (mask >> u) & 1u, av = (mask >> v) & 1u;
        const bool e = g.has_edge(u, v);
        if (au && av && e) ok = false;
        if (au != av && !e) ok = false;
        if (!au && !av && e) ++inside_b;
      }
    }
    if (ok && inside_b <= budget) return true;
  }
  return false;
}

bool permutation_isomorphic(const dlap::Graph& a, const dlap::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.order());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  do {
    bool same = true;
    for (const auto& e : a.edges()) {
      if (!b.has_edge(p[e.u], p[e.v])) {
        same = false;
        break;
      }
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

void for_each_connected_graph(std::size_t n, const std::function<void(const dlap::Graph&)>& fn) {
  std::vector<dlap::Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<dlap::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) edges.push_back(pairs[i]);
    dlap::Graph g(n, edges);
    if (dlap::is_connected(g)) fn(g);
  }
}

std::vector<std::pair<std::size_t, std::size_t>> decode_graph6(const std::string& s) {
  const std::size_t n = static_cast<unsigned char>(s.at(0)) - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = static_cast<unsigned char>(s[i]) - 63;
    for (int k = 5; k >= 0; --k) bits.push_back((x >> k) & 1);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (bits.at(k++)) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace oracle
