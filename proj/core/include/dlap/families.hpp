#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlap/cayley.hpp"
#include "dlap/graph.hpp"
#include "dlap/metric.hpp"

namespace dlap {

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  CompleteBipartitePlus,
  Barbell,
  RandomConnected,
  RandomCayley,
  RandomMetric,
};

/// "path", "cycle", "complete", "complete-bipartite-plus", "barbell",
/// "random-connected", "random-cayley", "random-metric" (underscores also
/// accepted).
FamilyKind parse_family_kind(std::string_view name);
const char* to_string(FamilyKind kind) noexcept;

/// Parameters of one instance family. Only the fields relevant to `kind` are
/// read; key() renders exactly those, so it identifies the family.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::size_t n = 0;          // path, cycle, complete, random-connected, random-metric
  std::size_t a = 0;          // complete-bipartite-plus: part sizes and
  std::size_t b = 0;          //   edges embedded in the larger part
  std::size_t extra = 0;
  std::size_t clique = 0;     // barbell: two K_clique joined by a path
  std::size_t path_len = 0;   //   with path_len edges
  double p = 0.5;             // random-connected edge probability
  std::string group;          // random-cayley, e.g. "Z3xZ5"
  std::size_t set_size = 2;   // random-cayley minimum connection-set size
  std::uint64_t seed = 0;

  /// Throws ValidationError for parameters outside the documented ranges.
  void validate() const;
  std::string key() const;
  /// True for families whose instances do not depend on the seed.
  bool deterministic() const noexcept;
};

struct Instance {
  std::size_t index = 0;
  std::string label;
  std::optional<Graph> graph;
  FiniteMetricSpace metric;
  /// Present for Cayley families: the metric seen from the identity.
  std::optional<SymmetricDVector> dvector;
};

/// Instance `index` of the family. Instance i draws from the stream
/// SplitMix64(seed).split(i), so any index can be produced on its own.
Instance generate_one(const FamilySpec& spec, std::size_t index);

std::vector<Instance> generate(const FamilySpec& spec, std::size_t count);

/// Two K_clique joined by a path with `path_len` edges: n = 2 clique + path_len - 1.
Graph barbell_graph(std::size_t clique, std::size_t path_len);

/// K_{a,b} with `extra` edges embedded in the larger part, chosen by `rng`.
Graph complete_bipartite_plus(std::size_t a, std::size_t b, std::size_t extra, SplitMix64& rng);

/// G(n, p) conditioned on connectivity (bounded retries).
Graph random_connected_graph(std::size_t n, double p, SplitMix64& rng);

/// Shortest-path closure of a complete graph with uniform random weights.
FiniteMetricSpace random_metric(std::size_t n, SplitMix64& rng);

}  // namespace dlap
