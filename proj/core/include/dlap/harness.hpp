#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlap/families.hpp"
#include "dlap/rational.hpp"

namespace dlap {

/// Exit codes shared by the harness and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitProvedBoundViolation = 2,
  kExitConjectureViolation = 3,
};

struct CheckSelection {
  bool cheeger = true;     // exact Cheeger constant and its bounds (graphs only)
  bool equality = true;    // equality-case classifier vs exact floor attainment
  bool classical = false;  // classical normalized-Laplacian gap (graphs only)
};

struct BatchLimits {
  std::size_t cheeger_max_n = 24;
  std::size_t spectrum_max_n = 4096;
  double tol = 1e-9;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One evaluated instance. Everything except `timing_ms` is a deterministic
/// function of (spec, seed, index).
struct Record {
  std::string spec;
  std::uint64_t seed = 0;
  std::size_t index = 0;
  std::string label;
  std::size_t n = 0;
  bool from_graph = false;
  double gap = 0.0;
  double top = 0.0;
  std::optional<Rational> h_exact;
  std::optional<double> h;
  std::optional<double> classical_gap;
  std::string equality;
  bool attains_floor = false;
  std::map<std::string, double> margins;
  std::vector<std::string> violations;
  bool conjecture_violation = false;
  std::optional<std::string> error;
  double timing_ms = 0.0;

  /// Idempotence key: spec, seed and index.
  std::string key() const;
  nlohmann::json to_json(bool with_timing = true) const;
};

struct BatchSummary {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<double> min_gap;
  std::string argmin_gap;
  std::optional<double> min_h;
  std::optional<Rational> min_h_exact;
  std::string argmin_h;
  std::optional<double> min_classical_gap;
  std::string argmin_classical_gap;
  std::vector<std::string> counterexamples;        // proved-bound violations
  std::vector<std::string> conjecture_violations;  // gap < 2/3 on a graph
  std::vector<std::string> errors;

  void absorb(const Record& r);
  /// 2 for any proved-bound violation, else 3 for conjecture-only findings,
  /// else 0. Per-instance errors alone do not change the code.
  int exit_code() const noexcept;
  nlohmann::json to_json() const;
};

struct BatchResult {
  std::vector<Record> records;
  BatchSummary summary;
};

/// Evaluates one instance; failures are captured in `Record::error`.
Record evaluate(const FamilySpec& spec, const Instance& inst, const CheckSelection& checks,
                const BatchLimits& limits);

class RecordSink;

/// Runs `count` instances of every spec on a worker pool. Records come back
/// (and reach the sink) ordered by spec then instance index, independent of
/// completion order.
BatchResult run_batch(std::span<const FamilySpec> specs, std::size_t count, const CheckSelection& checks,
                      const BatchLimits& limits = {}, RecordSink* sink = nullptr);

/// Append-only JSONL file of records. Keys already present in the file are
/// skipped on append, so re-running a scan is idempotent. Each record is
/// written with a single write(2) on an O_APPEND descriptor; a torn final
/// line left by a crash is truncated when the file is reopened.
class RecordSink {
 public:
  explicit RecordSink(std::filesystem::path path);
  ~RecordSink();
  RecordSink(const RecordSink&) = delete;
  RecordSink& operator=(const RecordSink&) = delete;

  /// False when the key was already present (nothing written).
  bool append(const Record& r);
  bool contains(const std::string& key) const { return keys_.count(key) != 0; }
  std::size_t written() const noexcept { return written_; }
  std::size_t skipped() const noexcept { return skipped_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  int fd_ = -1;
  std::map<std::string, bool> keys_;
  std::size_t written_ = 0;
  std::size_t skipped_ = 0;
};

/// Parses every complete line of a JSONL file.
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

/// Writes `doc` to a temporary sibling and renames it over `path`.
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& doc);

/// Summary document with run metadata (RNG algorithm, seeds, specs).
nlohmann::json summary_document(const BatchSummary& s, std::span<const FamilySpec> specs, std::size_t count);

}  // namespace dlap
