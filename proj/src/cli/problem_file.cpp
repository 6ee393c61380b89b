#include "cframe/cli/problem_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cframe/error.hpp"

namespace cframe::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

const json& require_array(const json& j, const std::string& path, std::size_t size) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != size) fail(path, "expected " + std::to_string(size) + " items, found " + std::to_string(j.size()));
  return j;
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "number is not finite");
  return v;
}

std::size_t require_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Complex parse_complex(const json& j, const std::string& path) {
  require_array(j, path, 2);
  return {require_number(j[0], path + "[0]"), require_number(j[1], path + "[1]")};
}

CMatrix parse_block(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  require_array(j, path, rows);
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto rp = path + "[" + std::to_string(r) + "]";
    require_array(j[r], rp, cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

AlgebraElement parse_algebra_element(const json& j, const AlgebraSpec& spec, const std::string& path) {
  require_array(j, path, spec.block_count());
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < spec.block_count(); ++i) {
    const auto n = spec.block_dim(i);
    blocks.push_back(parse_block(j[i], n, n, path + "[" + std::to_string(i) + "]"));
  }
  return AlgebraElement(spec, std::move(blocks));
}

ModuleElement parse_element(const json& j, const AlgebraSpec& spec, std::size_t rank, const std::string& path) {
  require_array(j, path, rank);
  std::vector<AlgebraElement> entries;
  for (std::size_t k = 0; k < rank; ++k) entries.push_back(parse_algebra_element(j[k], spec, path + "[" + std::to_string(k) + "]"));
  return ModuleElement::from_entries(spec, entries);
}

ModuleOperator parse_operator(const json& j, const AlgebraSpec& spec, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a non-empty array of entries");
  const std::size_t cols = j[0].size();
  std::vector<std::vector<AlgebraElement>> entries(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto rp = path + "[" + std::to_string(r) + "]";
    require_array(j[r], rp, cols);
    for (std::size_t c = 0; c < cols; ++c)
      entries[r].push_back(parse_algebra_element(j[r][c], spec, rp + "[" + std::to_string(c) + "]"));
  }
  return ModuleOperator::from_entries(spec, entries);
}

void require_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path, "unknown key '" + key + "'");
  }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json algebra_element_to_json(const AlgebraElement& a) {
  json out = json::array();
  for (const auto& b : a.blocks()) {
    json block = json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(complex_to_json(b(r, c)));
      block.push_back(std::move(row));
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::size_t depth(const json& j) {
  if (!j.is_array()) return 0;
  std::size_t d = 0;
  for (const auto& c : j) d = std::max(d, depth(c));
  return d + 1;
}

std::string number_text(const json& j) {
  if (j.is_number_integer()) return j.dump();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

void dump_inline(const json& j, std::string& out) {
  if (j.is_array()) {
    out += '[';
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out += ", ";
      dump_inline(j[k], out);
    }
    out += ']';
  } else if (j.is_number()) {
    out += number_text(j);
  } else {
    out += j.dump();
  }
}

void dump_value(const json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      dump_value(value, indent + 2, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && depth(j) > 2) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      dump_value(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    dump_inline(j, out);
  }
}

}  // namespace

ProjectiveModule ProblemFile::module() const {
  return projection ? make_projective_module(*projection) : free_module(spec, rank);
}

ModuleFrame ProblemFile::frame(const std::string& name) const {
  const auto it = frames.find(name);
  if (it == frames.end()) throw Error(ErrorKind::ParseError, "frames: no frame named '" + name + "'");
  return ModuleFrame(module(), it->second);
}

ProblemFile parse_problem(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + " column " + std::to_string(col) +
                                           ": invalid JSON");
  }
  require_keys(root, "$", {"algebra", "module", "frames", "operators"});
  if (!root.contains("algebra")) fail("$", "missing 'algebra'");
  if (!root.contains("module")) fail("$", "missing 'module'");

  ProblemFile p;
  const auto& alg = root["algebra"];
  require_keys(alg, "algebra", {"blocks"});
  if (!alg.contains("blocks") || !alg["blocks"].is_array() || alg["blocks"].empty()) {
    fail("algebra.blocks", "expected a non-empty array of block sizes");
  }
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < alg["blocks"].size(); ++i) {
    const auto n = require_count(alg["blocks"][i], "algebra.blocks[" + std::to_string(i) + "]");
    if (n == 0) fail("algebra.blocks[" + std::to_string(i) + "]", "block size must be positive");
    blocks.push_back(n);
  }
  p.spec = AlgebraSpec(std::move(blocks));

  const auto& mod = root["module"];
  require_keys(mod, "module", {"rank", "projection"});
  if (!mod.contains("rank")) fail("module", "missing 'rank'");
  p.rank = require_count(mod["rank"], "module.rank");
  if (p.rank == 0) fail("module.rank", "rank must be positive");
  if (mod.contains("projection")) {
    auto proj = parse_operator(mod["projection"], p.spec, "module.projection");
    if (proj.rows() != p.rank || proj.cols() != p.rank) fail("module.projection", "projection must be rank x rank");
    try {
      (void)make_projective_module(proj);
    } catch (const Error& e) {
      fail("module.projection", e.what());
    }
    p.projection = std::move(proj);
  }

  if (root.contains("frames")) {
    if (!root["frames"].is_object()) fail("frames", "expected an object");
    for (const auto& [name, value] : root["frames"].items()) {
      const std::string fp = "frames." + name;
      if (!value.is_array()) fail(fp, "expected an array of elements");
      std::vector<ModuleElement> xs;
      for (std::size_t j = 0; j < value.size(); ++j)
        xs.push_back(parse_element(value[j], p.spec, p.rank, fp + "[" + std::to_string(j) + "]"));
      try {
        (void)ModuleFrame(p.module(), xs);
      } catch (const Error& e) {
        fail(fp, e.what());
      }
      p.frames.emplace(name, std::move(xs));
    }
  }
  if (root.contains("operators")) {
    if (!root["operators"].is_object()) fail("operators", "expected an object");
    for (const auto& [name, value] : root["operators"].items())
      p.operators.emplace(name, parse_operator(value, p.spec, "operators." + name));
  }
  return p;
}

ProblemFile read_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

json element_to_json(const ModuleElement& x) {
  json out = json::array();
  for (const auto& e : x.entries()) out.push_back(algebra_element_to_json(e));
  return out;
}

json operator_to_json(const ModuleOperator& t) {
  json out = json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(algebra_element_to_json(t.entry(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const ProblemFile& problem) {
  json root;
  root["algebra"]["blocks"] = problem.spec.blocks();
  root["module"]["rank"] = problem.rank;
  if (problem.projection) root["module"]["projection"] = operator_to_json(*problem.projection);
  root["frames"] = json::object();
  for (const auto& [name, xs] : problem.frames) {
    json list = json::array();
    for (const auto& x : xs) list.push_back(element_to_json(x));
    root["frames"][name] = std::move(list);
  }
  root["operators"] = json::object();
  for (const auto& [name, t] : problem.operators) root["operators"][name] = operator_to_json(t);
  return root;
}

std::string canonical_dump(const json& value) {
  std::string out;
  dump_value(value, 0, out);
  out += '\n';
  return out;
}

std::string write_problem(const ProblemFile& problem) { return canonical_dump(to_json(problem)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace cframe::cli
