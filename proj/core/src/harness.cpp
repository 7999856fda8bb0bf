#include "dlap/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "dlap/cheeger.hpp"
#include "dlap/error.hpp"
#include "dlap/random.hpp"
#include "dlap/spectral.hpp"

namespace dlap {

std::string Record::key() const { return spec + "|" + std::to_string(seed) + "|" + std::to_string(index); }

nlohmann::json Record::to_json(bool with_timing) const {
  nlohmann::json j;
  j["spec"] = spec;
  j["seed"] = seed;
  j["index"] = index;
  j["label"] = label;
  j["n"] = n;
  j["from_graph"] = from_graph;
  if (error) {
    j["error"] = *error;
  } else {
    j["error"] = nullptr;
    j["gap"] = gap;
    j["lambda_max"] = top;
    if (h_exact) {
      j["h"] = {{"num", h_exact->num()}, {"den", h_exact->den()}};
    } else {
      j["h"] = nullptr;
    }
    j["h_decimal"] = h ? nlohmann::json(*h) : nlohmann::json(nullptr);
    j["classical_gap"] = classical_gap ? nlohmann::json(*classical_gap) : nlohmann::json(nullptr);
    j["equality"] = equality.empty() ? nlohmann::json(nullptr) : nlohmann::json(equality);
    j["attains_floor"] = attains_floor;
    j["margins"] = margins;
    j["violations"] = violations;
    j["conjecture_violation"] = conjecture_violation;
  }
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

namespace {

void collect_failures(const CheckReport& report, std::vector<std::string>& out) {
  for (const auto& c : report.checks()) {
    if (!c.passed) out.push_back(c.name + " (value " + std::to_string(c.value) + ", bound " + std::to_string(c.bound) + ")");
  }
}

}  // namespace

Record evaluate(const FamilySpec& spec, const Instance& inst, const CheckSelection& checks, const BatchLimits& limits) {
  Record r;
  r.spec = spec.key();
  r.seed = spec.seed;
  r.index = inst.index;
  r.label = inst.label;
  r.n = inst.metric.size();
  r.from_graph = inst.metric.from_graph;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::size_t n = r.n;
    Spectrum s;
    if (inst.dvector) {
      s = cayley_spectrum(*inst.dvector);
    } else {
      if (n > limits.spectrum_max_n) {
        throw CapacityError("dense spectrum capped at n = " + std::to_string(limits.spectrum_max_n));
      }
      s = ndl_spectrum(inst.metric);
    }
    r.gap = spectral_gap(s);
    r.top = s.eigenvalues.back();

    CheckReport proved;
    proved.add({"smallest eigenvalue is zero", std::abs(s.eigenvalues.front()) <= limits.tol, s.eigenvalues.front(), 0.0,
                limits.tol - std::abs(s.eigenvalues.front()), {}});
    proved.at_most("largest eigenvalue <= 2", r.top, 2.0, limits.tol);
    proved.at_least("gap >= (9-4*sqrt2)/7", r.gap, kMetricGapFloor, limits.tol);
    r.margins["gap_floor"] = r.gap - kMetricGapFloor;
    r.margins["lambda_max_le_2"] = 2.0 - r.top;
    if (r.from_graph && n > 2) {
      proved.strictly_below("largest eigenvalue < 2", r.top, 2.0, 0.0);
      r.margins["lambda_max_lt_2"] = 2.0 - r.top;
    }
    if (r.from_graph) {
      r.margins["conjecture_two_thirds"] = r.gap - kTwoThirds;
      r.conjecture_violation = r.gap < kTwoThirds - limits.tol;
    }
    if (inst.dvector) {
      const CheckReport cay = check_cayley_bounds(s, inst.dvector->group(), limits.tol);
      proved.merge(cay);
      r.margins["cayley_two_thirds"] = r.gap - kTwoThirds;
      if (inst.dvector->group().order() % 2 == 1) r.margins["cayley_odd"] = r.gap - kOddCayleyGapFloor;
    }

    if (inst.graph && checks.cheeger && n <= limits.cheeger_max_n) {
      const auto& d = *inst.metric.exact;
      const auto res = cheeger_exact(d, transmission(d), CheegerOptions{limits.cheeger_max_n});
      r.h_exact = res.h;
      r.h = res.h.to_double();
      const auto cb = check_cheeger_bounds(res, r.gap, n, limits.tol);
      proved.merge(cb.checks);
      r.attains_floor = cb.attains_floor;
      r.margins["cheeger_floor"] = (res.h - cb.floor).to_double();
      r.margins["cheeger_third"] = (res.h - Rational(1, 3)).to_double();
      r.margins["cheeger_lower"] = r.gap - *r.h * *r.h / 2.0;
      r.margins["cheeger_upper"] = 2.0 * *r.h - r.gap;
      if (checks.equality) {
        const auto cls = classify_equality(*inst.graph);
        r.equality = cls.kind == EqualityClass::None ? "none" : cls.label;
        if ((cls.kind != EqualityClass::None) != cb.attains_floor) {
          r.violations.push_back("equality classifier (" + r.equality + ") disagrees with exact floor attainment");
        }
      }
    }
    if (inst.graph && checks.classical) {
      r.classical_gap = spectral_gap(eig_sym(build_classical_nl(*inst.graph)));
    }
    collect_failures(proved, r.violations);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void BatchSummary::absorb(const Record& r) {
  ++instances;
  if (r.error) {
    ++failures;
    errors.push_back(r.key() + ": " + *r.error);
    return;
  }
  if (!min_gap || r.gap < *min_gap) {
    min_gap = r.gap;
    argmin_gap = r.label;
  }
  if (r.h_exact && (!min_h_exact || *r.h_exact < *min_h_exact)) {
    min_h_exact = r.h_exact;
    min_h = r.h;
    argmin_h = r.label;
  } else if (!r.h_exact && r.h && (!min_h || *r.h < *min_h)) {
    min_h = r.h;
    argmin_h = r.label;
  }
  if (r.classical_gap && (!min_classical_gap || *r.classical_gap < *min_classical_gap)) {
    min_classical_gap = r.classical_gap;
    argmin_classical_gap = r.label;
  }
  for (const auto& v : r.violations) counterexamples.push_back(r.label + ": " + v);
  if (r.conjecture_violation) {
    conjecture_violations.push_back(r.label + ": gap " + std::to_string(r.gap) + " < 2/3");
  }
}

int BatchSummary::exit_code() const noexcept {
  if (!counterexamples.empty()) return kExitProvedBoundViolation;
  if (!conjecture_violations.empty()) return kExitConjectureViolation;
  return kExitOk;
}

nlohmann::json BatchSummary::to_json() const {
  auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["instances"] = instances;
  j["failures"] = failures;
  j["min_gap"] = opt(min_gap);
  j["argmin"] = argmin_gap;
  j["min_h"] = opt(min_h);
  j["min_h_exact"] = min_h_exact ? nlohmann::json{{"num", min_h_exact->num()}, {"den", min_h_exact->den()}}
                                 : nlohmann::json(nullptr);
  j["argmin_h"] = argmin_h;
  j["min_classical_gap"] = opt(min_classical_gap);
  j["argmin_classical_gap"] = argmin_classical_gap;
  j["counterexamples"] = counterexamples;
  j["conjecture_violations"] = conjecture_violations;
  j["errors"] = errors;
  j["exit_code"] = exit_code();
  return j;
}

BatchResult run_batch(std::span<const FamilySpec> specs, std::size_t count, const CheckSelection& checks,
                      const BatchLimits& limits, RecordSink* sink) {
  struct Job {
    std::size_t spec;
    std::size_t index;
  };
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    specs[s].validate();
    for (std::size_t i = 0; i < count; ++i) jobs.push_back({s, i});
  }

  std::vector<Record> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      const FamilySpec& spec = specs[jobs[j].spec];
      const std::size_t index = jobs[j].index;
      try {
        records[j] = evaluate(spec, generate_one(spec, index), checks, limits);
      } catch (const std::exception& e) {
        Record r;
        r.spec = spec.key();
        r.seed = spec.seed;
        r.index = index;
        r.error = e.what();
        records[j] = std::move(r);
      }
    }
  };

  unsigned threads = limits.threads ? limits.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  BatchResult out;
  for (auto& r : records) {
    // Keys already in the sink are not rewritten but still count toward the
    // summary, so a re-run reports the same extremes.
    if (sink) sink->append(r);
    out.summary.absorb(r);
    out.records.push_back(std::move(r));
  }
  return out;
}

nlohmann::json summary_document(const BatchSummary& s, std::span<const FamilySpec> specs, std::size_t count) {
  auto families = nlohmann::json::array();
  for (const auto& spec : specs) families.push_back({{"spec", spec.key()}, {"seed", spec.seed}});
  return {{"metadata", {{"rng", SplitMix64::kAlgorithm}, {"count", count}, {"families", families}}},
          {"summary", s.to_json()}};
}

}  // namespace dlap
