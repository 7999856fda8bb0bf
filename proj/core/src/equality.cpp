#include <algorithm>
#include <numeric>

#include "dlap/cheeger.hpp"
#include "dlap/error.hpp"

namespace dlap {

const char* to_string(EqualityClass c) noexcept {
  switch (c) {
    case EqualityClass::EvenExtremal: return "even-extremal";
    case EqualityClass::OddExtremal: return "odd-extremal";
    case EqualityClass::N5Exceptional: return "n5-exceptional";
    case EqualityClass::None: break;
  }
  return "none";
}

const std::vector<Graph>& n5_exceptional_graphs() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> g;
    g.push_back(path_graph(5));
    const std::vector<Edge> pendant{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}};
    g.emplace_back(5, pendant);
    // C_4 uvwx = 0123, pendant xy = 34, chord uw = 02.
    const std::vector<Edge> chord{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {0, 2}};
    g.emplace_back(5, chord);
    return g;
  }();
  return graphs;
}

namespace {

const char* const kN5Labels[] = {"P_5", "C_4 + pendant edge", "C_4 + pendant edge + chord"};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) deg[u] = g.degree(u);
  std::sort(deg.begin(), deg.end());
  return deg;
}

}  // namespace

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  const std::size_t n = a.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const Edge& e : edges) {
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

EqualityClassification classify_equality(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw ValidationError("equality classification needs n >= 2");
  require_connected(g);

  EqualityClassification out;
  out.edge_limit = n - 1;
  out.edge_limit_alt = n;
  const std::size_t m = n / 2;

  // A vertex class A with N(a) = V \ A for every a in A is exactly an
  // independent set completely joined to its complement. Such an A is the
  // full class of vertices sharing that neighborhood.
  std::vector<bool> tried(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (tried[v]) continue;
    std::vector<std::size_t> part;
    for (std::size_t u = 0; u < n; ++u) {
      if (g.neighbors(u) == g.neighbors(v)) {
        part.push_back(u);
        tried[u] = true;
      }
    }
    if (part.size() != m || g.degree(v) != n - m) continue;
    std::vector<bool> in_part(n, false);
    for (std::size_t u : part) in_part[u] = true;
    const auto& nbrs = g.neighbors(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](std::size_t w) { return in_part[w]; })) continue;

    std::size_t inner = 0;
    for (const Edge& e : g.edges())
      if (!in_part[e.u] && !in_part[e.v]) ++inner;

    const std::string kmm = "K_{" + std::to_string(m) + "," + std::to_string(n - m) + "}";
    if (n % 2 == 0) {
      if (inner != 0) continue;
      out.kind = EqualityClass::EvenExtremal;
      out.part = part;
      out.label = kmm;
      return out;
    }
    if (inner <= out.edge_limit) {
      out.kind = EqualityClass::OddExtremal;
      out.part = part;
      out.larger_part_edges = inner;
      out.label = kmm + (inner == 0 ? "" : " + " + std::to_string(inner) + " edge" + (inner == 1 ? "" : "s") +
                                                   " in larger part");
      return out;
    }
  }

  if (n == 5) {
    const auto& special = n5_exceptional_graphs();
    for (std::size_t i = 0; i < special.size(); ++i) {
      if (isomorphic_small(g, special[i])) {
        out.kind = EqualityClass::N5Exceptional;
        out.label = kN5Labels[i];
        return out;
      }
    }
  }
  out.label = "none";
  return out;
}

}  // namespace dlap
