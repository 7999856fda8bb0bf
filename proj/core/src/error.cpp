#include "dlap/error.hpp"

#include <sstream>

namespace dlap {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::ostringstream os;
  os << "invalid metric (" << v.size() << " violation" << (v.size() == 1 ? "" : "s") << ")";
  for (const auto& s : v) os << "\n  " << s;
  return os.str();
}

std::string line_prefix(std::size_t line, const std::string& what) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line_prefix(line, what)), line_(line) {}

DisconnectedError::DisconnectedError(std::size_t reached, std::size_t unreached)
    : Error("graph is disconnected: vertex " + std::to_string(unreached) +
            " is not reachable from vertex " + std::to_string(reached)),
      reached_(reached),
      unreached_(unreached) {}

MetricError::MetricError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ConvergenceError::ConvergenceError(int sweeps, double off_norm)
    : Error("Jacobi iteration did not converge after " + std::to_string(sweeps) +
            " sweeps (off-diagonal norm " + std::to_string(off_norm) + ")"),
      sweeps_(sweeps),
      off_norm_(off_norm) {}

}  // namespace dlap
