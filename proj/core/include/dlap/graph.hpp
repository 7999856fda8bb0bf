#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlap/metric.hpp"

namespace dlap {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices {0, ..., n-1}. Immutable once built;
/// duplicate edges collapse, loops and out-of-range endpoints are rejected.
class Graph {
 public:
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t u) const { return adjacency_.at(u).size(); }
  /// Sorted neighbor list.
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adjacency_.at(u); }
  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Parses whitespace-separated "u v" lines. An optional first line "n <count>"
/// fixes the order; otherwise it is the largest label plus one. Blank lines and
/// '#' comments are ignored.
Graph parse_edge_list(std::string_view text);

/// Decodes the short graph6 form (n <= 62). Surrounding whitespace and an
/// optional ">>graph6<<" header are accepted.
Graph parse_graph6(std::string_view text);

/// Canonical short-form graph6 encoding.
std::string to_graph6(const Graph& g);

/// BFS hop counts from `source`; unreachable vertices get -1.
std::vector<std::int64_t> bfs_distances(const Graph& g, std::size_t source);

bool is_connected(const Graph& g);

/// Throws DisconnectedError naming vertex 0 and the first unreachable vertex.
void require_connected(const Graph& g);

/// Shortest-path metric of a connected graph.
IntDistanceMatrix bfs_apsp(const Graph& g);

/// Validated metric space of a connected graph, flagged as graph-derived.
FiniteMetricSpace metric_space(const Graph& g);

// Small named graphs used throughout tests and the generators.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

}  // namespace dlap
