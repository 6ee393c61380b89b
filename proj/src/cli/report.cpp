#include "cframe/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cframe::cli {

std::string format_number(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

double report_number(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

namespace {

struct TextVisitor {
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(double d) const { return format_number(d); }
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(const std::vector<std::int64_t>& v) const {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
    return out;
  }
  std::string operator()(const std::vector<double>& v) const {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + format_number(v[k]);
    return out;
  }
};

struct JsonVisitor {
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
  nlohmann::ordered_json operator()(double d) const { return report_number(d); }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(const std::vector<std::int64_t>& v) const { return v; }
  nlohmann::ordered_json operator()(const std::vector<double>& v) const {
    auto out = nlohmann::ordered_json::array();
    for (double d : v) out.push_back(report_number(d));
    return out;
  }
};

}  // namespace

std::string Report::text() const {
  std::string out;
  for (const auto& [key, value] : entries_) out += key + ": " + std::visit(TextVisitor{}, value) + "\n";
  return out;
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, value] : entries_) out[key] = std::visit(JsonVisitor{}, value);
  return out;
}

}  // namespace cframe::cli
