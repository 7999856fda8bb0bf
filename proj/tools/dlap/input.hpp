#pragma once

#include <dlap/graph.hpp>
#include <dlap/metric.hpp>

#include <optional>
#include <string>

namespace dlap::cli {

struct InputFlags {
  std::string edges;   // path or "-" for stdin
  std::string graph6;  // literal string
  std::string metric;  // CSV path
};

struct LoadedInput {
  std::string source;
  std::optional<Graph> graph;
  FiniteMetricSpace metric;
};

/// Exactly one source must be set. Graph inputs must be connected.
LoadedInput load_input(const InputFlags& flags);

}  // namespace dlap::cli
