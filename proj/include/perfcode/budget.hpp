#pragma once

#include <chrono>
#include <optional>

namespace perfcode {

/// Wall-clock budget for long enumerations. A default-constructed budget never expires.
class Budget {
 public:
  using clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget unlimited() { return {}; }
  static Budget seconds(double s);
  /// Reads PERFCODE_BUDGET_SECONDS; unlimited when unset or not a positive number.
  static Budget from_env();

  bool expired() const { return deadline_ && clock::now() >= *deadline_; }
  bool limited() const { return deadline_.has_value(); }

 private:
  std::optional<clock::time_point> deadline_;
};

}  // namespace perfcode
