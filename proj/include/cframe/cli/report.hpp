#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cframe::cli {

/// Ordered key/value report printed either as "key: value" lines or as a
/// JSON object with the same keys in the same order.
class Report {
 public:
  using Value = std::variant<bool, std::int64_t, double, std::string, std::vector<std::int64_t>, std::vector<double>>;

  void add(std::string key, Value value) { entries_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, Value>>& entries() const noexcept { return entries_; }

  std::string text() const;
  nlohmann::ordered_json json() const;

 private:
  std::vector<std::pair<std::string, Value>> entries_;
};

/// %.12g after snapping |v| < 1e-12 to zero.
std::string format_number(double v);
/// The value that format_number prints, as a double.
double report_number(double v);

}  // namespace cframe::cli
