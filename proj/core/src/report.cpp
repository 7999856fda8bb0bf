#include "dlap/report.hpp"

#include <algorithm>

namespace dlap {

void CheckReport::at_least(std::string name, double value, double bound, double tol, std::string detail) {
  double margin = value - bound;
  checks_.push_back({std::move(name), margin >= -tol, value, bound, margin, std::move(detail)});
}

void CheckReport::at_most(std::string name, double value, double bound, double tol, std::string detail) {
  double margin = bound - value;
  checks_.push_back({std::move(name), margin >= -tol, value, bound, margin, std::move(detail)});
}

void CheckReport::strictly_above(std::string name, double value, double bound, double tol,
                                 std::string detail) {
  double margin = value - bound;
  checks_.push_back({std::move(name), margin > tol, value, bound, margin, std::move(detail)});
}

void CheckReport::strictly_below(std::string name, double value, double bound, double tol,
                                 std::string detail) {
  double margin = bound - value;
  checks_.push_back({std::move(name), margin > tol, value, bound, margin, std::move(detail)});
}

void CheckReport::merge(const CheckReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool CheckReport::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckReport::find(std::string_view name) const noexcept {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json CheckReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"value", c.value},
                        {"bound", c.bound}, {"margin", c.margin}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return {{"passed", passed()}, {"checks", std::move(arr)}};
}

}  // namespace dlap
