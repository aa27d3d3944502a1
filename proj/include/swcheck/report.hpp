#pragma once

// Machine-readable check reports.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace swcheck {

class Report {
 public:
  using Json = nlohmann::ordered_json;

  Report(std::string check, std::string model) : check_(std::move(check)), model_(std::move(model)) {}

  void set_points(std::uint64_t n) { points_ = n; }
  void set_seed(std::uint64_t s) { seed_ = s; }
  void set_perturbed(bool p) { perturbed_ = p; }
  Json& parameters() { return parameters_; }
  Json& chain() { return chain_; }

  /// Records a residual; the check passes iff residual <= tol (NaN fails).
  void add(const std::string& name, double residual, double tol) {
    residuals_[name] = residual;
    tolerances_[name] = tol;
    checks_[name] = residual <= tol;
  }

  bool pass() const {
    for (const auto& [name, ok] : checks_.items())
      if (!ok.get<bool>()) return false;
    return true;
  }

  const std::string& check() const { return check_; }
  const Json& residuals() const { return residuals_; }
  const Json& checks() const { return checks_; }

  Json to_json(double wall_time) const {
    Json j;
    j["check"] = check_;
    j["model"] = model_;
    j["points"] = points_;
    j["seed"] = seed_;
    j["parameters"] = parameters_.is_null() ? Json::object() : parameters_;
    j["residuals"] = residuals_.is_null() ? Json::object() : residuals_;
    j["tolerances"] = tolerances_.is_null() ? Json::object() : tolerances_;
    j["checks"] = checks_.is_null() ? Json::object() : checks_;
    if (!chain_.is_null()) j["chain"] = chain_;
    j["perturbed"] = perturbed_;
    j["pass"] = pass();
    j["wall_time"] = wall_time;
    return j;
  }

 private:
  std::string check_;
  std::string model_;
  std::uint64_t points_ = 0;
  std::uint64_t seed_ = 0;
  bool perturbed_ = false;
  Json parameters_;
  Json residuals_;
  Json tolerances_;
  Json checks_;
  Json chain_;
};

}  // namespace swcheck
