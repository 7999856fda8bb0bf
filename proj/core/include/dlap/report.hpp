#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dlap {

/// One pass/fail line of a verification report. `margin` is signed slack in
/// the direction of the inequality: nonnegative (or positive, for strict
/// checks) when the check holds.
struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  std::string detail;
};

class CheckReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Records value >= bound - tol.
  void at_least(std::string name, double value, double bound, double tol, std::string detail = {});
  /// Records value <= bound + tol.
  void at_most(std::string name, double value, double bound, double tol, std::string detail = {});
  /// Records value > bound + tol (strict, tolerance widens the gap).
  void strictly_above(std::string name, double value, double bound, double tol, std::string detail = {});
  /// Records value < bound - tol.
  void strictly_below(std::string name, double value, double bound, double tol, std::string detail = {});

  void merge(const CheckReport& other);

  bool passed() const noexcept;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  /// Null when no check carries that name.
  const Check* find(std::string_view name) const noexcept;

  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace dlap
