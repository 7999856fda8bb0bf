#include "dlap/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <optional>
#include <sstream>
#include <string>

#include "dlap/error.hpp"

namespace dlap {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

std::size_t parse_label(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

constexpr int kGraph6Offset = 63;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::size_t> fixed_n;
  std::size_t max_label = 0;
  bool any_label = false;
  bool seen_content = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!seen_content && toks[0] == "n") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      fixed_n = parse_label(toks[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two vertex labels, got " + std::to_string(toks.size()) +
                                    " tokens");
    }
    std::size_t u = parse_label(toks[0], line_no);
    std::size_t v = parse_label(toks[1], line_no);
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) + ": loop at vertex " +
                            std::to_string(u));
    }
    max_label = std::max({max_label, u, v});
    any_label = true;
    edges.push_back({std::min(u, v), std::max(u, v)});
    if (end == text.size()) break;
  }

  std::size_t n = any_label ? max_label + 1 : 0;
  if (fixed_n) {
    if (any_label && max_label >= *fixed_n) {
      throw ValidationError("vertex label " + std::to_string(max_label) + " exceeds declared n = " +
                            std::to_string(*fixed_n));
    }
    n = *fixed_n;
  }
  if (n == 0) throw ParseError(0, "edge list defines no vertices");
  return Graph(n, edges);
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError(0, "graph6: empty input");

  int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw ParseError(0, "graph6: long form (n > 62) is not supported");
  if (head < kGraph6Offset || head > 125) {
    throw ParseError(0, "graph6: bad header byte " + std::to_string(head));
  }
  std::size_t n = static_cast<std::size_t>(head - kGraph6Offset);
  std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t need = (bits + 5) / 6;
  std::string_view body = text.substr(1);
  if (body.size() < need) {
    throw ParseError(0, "graph6: truncated bit stream (" + std::to_string(body.size()) + " of " +
                            std::to_string(need) + " bytes)");
  }
  if (body.size() > need) throw ParseError(0, "graph6: trailing bytes after bit stream");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(body[k / 6]);
      if (byte < kGraph6Offset || byte > 126) {
        throw ParseError(0, "graph6: byte " + std::to_string(k / 6 + 1) + " out of range");
      }
      if ((byte - kGraph6Offset) & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  for (; k < need * 6; ++k) {
    int byte = static_cast<unsigned char>(body[k / 6]);
    if (byte < kGraph6Offset || byte > 126) throw ParseError(0, "graph6: byte out of range");
    if ((byte - kGraph6Offset) & (1 << (5 - k % 6))) throw ParseError(0, "graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  std::size_t n = g.order();
  if (n > 62) throw ValidationError("graph6 short form supports n <= 62");
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  return out;
}

std::vector<std::int64_t> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<std::int64_t> dist(g.order(), -1);
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t x) { return x < 0; });
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw ValidationError("graph has no vertices");
  auto dist = bfs_distances(g, 0);
  auto it = std::find(dist.begin(), dist.end(), -1);
  if (it != dist.end()) throw DisconnectedError(0, static_cast<std::size_t>(it - dist.begin()));
}

IntDistanceMatrix bfs_apsp(const Graph& g) {
  require_connected(g);
  std::size_t n = g.order();
  std::vector<std::int64_t> values;
  values.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    values.insert(values.end(), row.begin(), row.end());
  }
  return IntDistanceMatrix(n, std::move(values));
}

FiniteMetricSpace metric_space(const Graph& g) { return validate_metric(bfs_apsp(g), true); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    e.push_back({std::min(i, j), std::max(i, j)});
  }
  return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, e);
}

}  // namespace dlap
