#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cframe/frame.hpp"

namespace cframe::cli {

/// On-disk problem description. Complex scalars are [re, im]; an element is
/// entry -> block -> row -> [re, im]; an operator is row -> column -> block
/// -> row -> [re, im].
struct ProblemFile {
  AlgebraSpec spec{std::vector<std::size_t>{1}};
  std::size_t rank = 0;
  std::optional<ModuleOperator> projection;
  std::map<std::string, std::vector<ModuleElement>> frames;
  std::map<std::string, ModuleOperator> operators;

  ProjectiveModule module() const;
  /// Throws ParseError naming the frame when it is missing.
  ModuleFrame frame(const std::string& name) const;
};

/// Parses and shape-validates. Every failure is a ParseError whose message
/// carries the JSON path (or the byte offset for syntax errors).
ProblemFile parse_problem(const std::string& text);
ProblemFile read_problem(const std::string& path);

nlohmann::json to_json(const ProblemFile& problem);
nlohmann::json element_to_json(const ModuleElement& x);
nlohmann::json operator_to_json(const ModuleOperator& t);

/// Canonical text: sorted keys, two-space indent, arrays of depth at most two
/// on one line, floats as %.17g with -0 written as 0, trailing newline.
std::string canonical_dump(const nlohmann::json& value);
std::string write_problem(const ProblemFile& problem);
/// Throws IoError.
void write_file(const std::string& path, const std::string& text);

}  // namespace cframe::cli
