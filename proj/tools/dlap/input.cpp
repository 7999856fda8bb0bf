#include "input.hpp"

#include <dlap/error.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace dlap::cli {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

LoadedInput load_input(const InputFlags& flags) {
  const int given = !flags.edges.empty() + !flags.graph6.empty() + !flags.metric.empty();
  if (given != 1) throw ValidationError("give exactly one of --edges, --graph6, --metric");
  LoadedInput in;
  if (!flags.metric.empty()) {
    in.source = "metric " + flags.metric;
    in.metric = validate_metric(parse_metric_csv(slurp(flags.metric)));
    return in;
  }
  if (!flags.edges.empty()) {
    in.source = flags.edges == "-" ? "edges <stdin>" : "edges " + flags.edges;
    in.graph = parse_edge_list(slurp(flags.edges));
  } else {
    in.source = "graph6 " + flags.graph6;
    in.graph = parse_graph6(flags.graph6);
  }
  in.metric = metric_space(*in.graph);
  return in;
}

}  // namespace dlap::cli
