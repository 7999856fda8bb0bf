#include "dlap/metric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "dlap/error.hpp"

namespace dlap {

namespace {

constexpr std::size_t kMaxListedViolations = 64;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Shared axiom check over any element accessor. Collects every violation,
// truncating the list (but not the count) for very bad inputs.
template <class Get>
std::vector<std::string> collect_violations(std::size_t n, Get at, double slack) {
  std::vector<std::string> out;
  std::size_t total = 0;
  auto add = [&](std::string s) {
    ++total;
    if (out.size() < kMaxListedViolations) out.push_back(std::move(s));
  };
  for (std::size_t u = 0; u < n; ++u) {
    double x = at(u, u);
    if (!std::isfinite(x) || x != 0.0) add("nonzero diagonal at (" + std::to_string(u) + "," + std::to_string(u) + "): " + fmt(x));
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double a = at(u, v), b = at(v, u);
      if (!std::isfinite(a) || !std::isfinite(b)) {
        add("non-finite entry at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        continue;
      }
      if (a != b) {
        add("asymmetry at (" + std::to_string(u) + "," + std::to_string(v) + "): " + fmt(a) +
            " != " + fmt(b));
      }
      if (a <= 0.0 || b <= 0.0) {
        add("nonpositive distance at (" + std::to_string(u) + "," + std::to_string(v) + "): " +
            fmt(std::min(a, b)));
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double duv = at(u, v);
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        double via = at(u, w) + at(w, v);
        if (duv > via + slack) {
          add("triangle (" + std::to_string(u) + "," + std::to_string(v) + ") via " +
              std::to_string(w) + ": " + fmt(duv) + " > " + fmt(at(u, w)) + "+" + fmt(at(w, v)));
        }
      }
    }
  }
  if (total > out.size()) out.push_back("... and " + std::to_string(total - out.size()) + " more");
  return out;
}

}  // namespace

RealDistanceMatrix to_real(const IntDistanceMatrix& d) {
  std::vector<double> v(d.values().begin(), d.values().end());
  return RealDistanceMatrix(d.size(), std::move(v));
}

FiniteMetricSpace validate_metric(const RawMatrix& m, double rel_tol) {
  std::size_t n = m.size();
  if (n == 0) throw ValidationError("metric must have at least one point");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) {
      throw ValidationError("metric matrix is not square: row " + std::to_string(i) + " has " +
                            std::to_string(m[i].size()) + " entries, expected " + std::to_string(n));
    }
  }
  double scale = 0.0;
  for (const auto& row : m)
    for (double x : row)
      if (std::isfinite(x)) scale = std::max(scale, std::abs(x));
  auto at = [&](std::size_t u, std::size_t v) { return m[u][v]; };
  auto violations = collect_violations(n, at, rel_tol * scale);
  if (!violations.empty()) throw MetricError(std::move(violations));

  std::vector<double> real;
  real.reserve(n * n);
  bool integral = true;
  for (const auto& row : m) {
    for (double x : row) {
      real.push_back(x);
      if (x != std::floor(x) || x > 9.0e15) integral = false;
    }
  }
  FiniteMetricSpace out{RealDistanceMatrix(n, real), std::nullopt, false};
  if (integral) {
    std::vector<std::int64_t> exact(real.begin(), real.end());
    out.exact = IntDistanceMatrix(n, std::move(exact));
  }
  return out;
}

FiniteMetricSpace validate_metric(const IntDistanceMatrix& d, bool from_graph) {
  std::size_t n = d.size();
  if (n == 0) throw ValidationError("metric must have at least one point");
  auto at = [&](std::size_t u, std::size_t v) { return static_cast<double>(d(u, v)); };
  auto violations = collect_violations(n, at, 0.0);
  if (!violations.empty()) throw MetricError(std::move(violations));
  return FiniteMetricSpace{to_real(d), d, from_graph};
}

RawMatrix parse_metric_csv(std::string_view text) {
  RawMatrix rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
      while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) cell.remove_prefix(1);
      while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.remove_suffix(1);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError(line_no, "bad number '" + std::string(cell) + "'");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "metric CSV is empty");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ParseError(i + 1, "expected " + std::to_string(rows.size()) + " values, got " +
                                  std::to_string(rows[i].size()));
    }
  }
  return rows;
}

}  // namespace dlap
