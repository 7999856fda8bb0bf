#include "dlap/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dlap/error.hpp"

namespace dlap {

namespace {

constexpr int kConnectRetries = 10000;

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

FamilyKind parse_family_kind(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "path") return FamilyKind::Path;
  if (s == "cycle") return FamilyKind::Cycle;
  if (s == "complete") return FamilyKind::Complete;
  if (s == "complete-bipartite-plus") return FamilyKind::CompleteBipartitePlus;
  if (s == "barbell") return FamilyKind::Barbell;
  if (s == "random-connected") return FamilyKind::RandomConnected;
  if (s == "random-cayley") return FamilyKind::RandomCayley;
  if (s == "random-metric") return FamilyKind::RandomMetric;
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

const char* to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::CompleteBipartitePlus: return "complete-bipartite-plus";
    case FamilyKind::Barbell: return "barbell";
    case FamilyKind::RandomConnected: return "random-connected";
    case FamilyKind::RandomCayley: return "random-cayley";
    case FamilyKind::RandomMetric: return "random-metric";
  }
  return "?";
}

void FamilySpec::validate() const {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
  };
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
      need(n >= 2 && n <= 4096, "n must be in [2, 4096]");
      break;
    case FamilyKind::Cycle:
      need(n >= 3 && n <= 4096, "cycle n must be in [3, 4096]");
      break;
    case FamilyKind::CompleteBipartitePlus: {
      need(a >= 1 && b >= 1 && a + b <= 4096, "part sizes must be >= 1");
      const std::size_t big = std::max(a, b);
      need(extra <= big * (big - 1) / 2, "too many extra edges for the larger part");
      break;
    }
    case FamilyKind::Barbell:
      need(clique >= 2 && path_len >= 1 && 2 * clique + path_len <= 4097, "barbell needs clique >= 2, path_len >= 1");
      break;
    case FamilyKind::RandomConnected:
      need(n >= 2 && n <= 4096, "n must be in [2, 4096]");
      need(p > 0.0 && p <= 1.0, "p must be in (0, 1]");
      break;
    case FamilyKind::RandomCayley: {
      const AbelianGroup g = AbelianGroup::parse(group);
      need(g.order() <= 4096, "group order must be <= 4096");
      need(set_size >= 1, "set_size must be >= 1");
      break;
    }
    case FamilyKind::RandomMetric:
      need(n >= 2 && n <= 4096, "n must be in [2, 4096]");
      break;
  }
}

std::string FamilySpec::key() const {
  std::string k = to_string(kind);
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Complete:
    case FamilyKind::RandomMetric:
      return k + ":n=" + std::to_string(n);
    case FamilyKind::CompleteBipartitePlus:
      return k + ":a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",extra=" + std::to_string(extra);
    case FamilyKind::Barbell:
      return k + ":k=" + std::to_string(clique) + ",len=" + std::to_string(path_len);
    case FamilyKind::RandomConnected:
      return k + ":n=" + std::to_string(n) + ",p=" + format_double(p);
    case FamilyKind::RandomCayley:
      return k + ":group=" + AbelianGroup::parse(group).name() + ",set=" + std::to_string(set_size);
  }
  return k;
}

bool FamilySpec::deterministic() const noexcept {
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Complete:
    case FamilyKind::Barbell:
      return true;
    case FamilyKind::CompleteBipartitePlus:
      return extra == 0;
    default:
      return false;
  }
}

Graph barbell_graph(std::size_t clique, std::size_t path_len) {
  if (clique < 2 || path_len < 1) throw ValidationError("barbell needs clique >= 2 and path_len >= 1");
  const std::size_t n = 2 * clique + path_len - 1;
  std::vector<Edge> e;
  const std::size_t right = clique + path_len - 1;  // first vertex of the second clique
  for (std::size_t i = 0; i < clique; ++i) {
    for (std::size_t j = i + 1; j < clique; ++j) {
      e.push_back({i, j});
      e.push_back({right + i, right + j});
    }
  }
  // Path clique-1 -> clique -> ... -> right.
  for (std::size_t v = clique - 1; v < right; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

Graph complete_bipartite_plus(std::size_t a, std::size_t b, std::size_t extra, SplitMix64& rng) {
  std::vector<Edge> e = complete_bipartite_graph(a, b).edges();
  const std::size_t big = std::max(a, b);
  const std::size_t offset = (b >= a) ? a : 0;
  std::vector<Edge> pool;
  for (std::size_t i = 0; i < big; ++i)
    for (std::size_t j = i + 1; j < big; ++j) pool.push_back({offset + i, offset + j});
  if (extra > pool.size()) throw ValidationError("too many extra edges for the larger part");
  // Partial Fisher-Yates: first `extra` entries become the sample.
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    e.push_back(pool[i]);
  }
  return Graph(a + b, e);
}

Graph random_connected_graph(std::size_t n, double p, SplitMix64& rng) {
  for (int attempt = 0; attempt < kConnectRetries; ++attempt) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.bernoulli(p)) e.push_back({i, j});
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
  throw Error("random_connected: no connected sample after " + std::to_string(kConnectRetries) + " retries");
}

FiniteMetricSpace random_metric(std::size_t n, SplitMix64& rng) {
  RawMatrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rng.uniform(0.1, 1.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[j][i] = d[i][j];
  return validate_metric(d, 1e-12);
}

Instance generate_one(const FamilySpec& spec, std::size_t index) {
  spec.validate();
  SplitMix64 rng = SplitMix64(spec.seed).split(index);
  Instance inst;
  inst.index = index;
  auto from_graph = [&](Graph g, std::string label) {
    inst.label = std::move(label);
    inst.metric = metric_space(g);
    inst.graph = std::move(g);
  };
  const std::string suffix = spec.deterministic() ? "" : " #" + std::to_string(index);
  try {
    switch (spec.kind) {
      case FamilyKind::Path:
        from_graph(path_graph(spec.n), "path n=" + std::to_string(spec.n));
        break;
      case FamilyKind::Cycle:
        from_graph(cycle_graph(spec.n), "cycle n=" + std::to_string(spec.n));
        break;
      case FamilyKind::Complete:
        from_graph(complete_graph(spec.n), "complete n=" + std::to_string(spec.n));
        break;
      case FamilyKind::CompleteBipartitePlus:
        from_graph(complete_bipartite_plus(spec.a, spec.b, spec.extra, rng),
                   "K_{" + std::to_string(spec.a) + "," + std::to_string(spec.b) + "}+" + std::to_string(spec.extra) +
                       suffix);
        break;
      case FamilyKind::Barbell:
        from_graph(barbell_graph(spec.clique, spec.path_len),
                   "barbell k=" + std::to_string(spec.clique) + " len=" + std::to_string(spec.path_len));
        break;
      case FamilyKind::RandomConnected:
        from_graph(random_connected_graph(spec.n, spec.p, rng), "random-connected n=" + std::to_string(spec.n) +
                                                                    " p=" + format_double(spec.p) + suffix);
        break;
      case FamilyKind::RandomCayley: {
        const AbelianGroup g = AbelianGroup::parse(spec.group);
        const auto conn = random_connection_set(g, spec.set_size, rng);
        Graph graph = cayley_graph(g, conn);
        inst.dvector = dvector_from_graph(g, graph);
        from_graph(std::move(graph), "random-cayley " + g.name() + suffix);
        break;
      }
      case FamilyKind::RandomMetric:
        inst.metric = random_metric(spec.n, rng);
        inst.label = "random-metric n=" + std::to_string(spec.n) + suffix;
        break;
    }
  } catch (const Error& e) {
    throw Error(std::string(e.what()) + " [family " + spec.key() + ", seed " + std::to_string(spec.seed) +
                ", index " + std::to_string(index) + "]");
  }
  return inst;
}

std::vector<Instance> generate(const FamilySpec& spec, std::size_t count) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_one(spec, i));
  return out;
}

}  // namespace dlap
