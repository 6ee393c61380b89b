#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "cframe/cli/problem_file.hpp"
#include "cframe/cli/report.hpp"
#include "cframe/error.hpp"
#include "golden.hpp"

namespace fs = std::filesystem;
using cframe::cli::run_cli;

namespace {

const std::string kSource = CFRAME_SOURCE_DIR;

golden::Outcome cli(std::vector<std::string> args) { return golden::run({"", 0, std::move(args)}); }

std::string temp_path(const std::string& name) { return (fs::temp_directory_path() / ("cframe_test_" + name)).string(); }

}  // namespace

TEST_CASE("golden reports") {
  const auto cases = golden::load_cases(kSource);
  REQUIRE(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto r = golden::run(c);
    CHECK(r.exit_code == c.exit_code);
    std::string expected;
    REQUIRE(golden::read_text(golden::golden_path(kSource, c), expected));
    CHECK(r.out == expected);
  }
}

TEST_CASE("fixtures are canonical") {
  for (const char* name : {"orthonormal_basis", "interval_sampled", "matrix_units"}) {
    CAPTURE(name);
    const auto path = kSource + "/fixtures/" + name + ".json";
    std::string text;
    REQUIRE(golden::read_text(path, text));
    CHECK(cframe::cli::write_problem(cframe::cli::parse_problem(text)) == text);
  }
}

TEST_CASE("json report matches the text report") {
  const std::vector<std::string> base{"analyze", kSource + "/fixtures/interval_sampled.json", "--frame",
                                      "interval_with_f"};
  const auto text = cli(base);
  auto with_json = base;
  with_json.push_back("--json");
  const auto json = nlohmann::ordered_json::parse(cli(with_json).out);
  std::istringstream lines(text.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto colon = line.find(": ");
    const auto key = line.substr(0, colon);
    const auto value = line.substr(colon + 2);
    REQUIRE(json.contains(key));
    const auto& j = json[key];
    if (j.is_boolean()) {
      CHECK(value == (j.get<bool>() ? "true" : "false"));
    } else if (j.is_number()) {
      CHECK(std::stod(value) == j.get<double>());
    } else {
      CHECK(value == j.get<std::string>());
    }
    ++count;
  }
  CHECK(count == json.size());
}

TEST_CASE("dual and tighten write problem fragments") {
  const auto out = temp_path("dual.json");
  const auto r = cli({"dual", kSource + "/fixtures/matrix_units.json", "--frame", "u", "--out", out});
  REQUIRE(r.exit_code == 0);
  const auto p = cframe::cli::read_problem(out);
  REQUIRE(p.frames.count("u_dual") == 1);
  const auto src = cframe::cli::read_problem(kSource + "/fixtures/matrix_units.json");
  const auto f = src.frame("u");
  const auto d = p.frame("u_dual");
  for (std::size_t j = 0; j < f.size(); ++j) CHECK(cframe::module_norm(f.element(j) - d.element(j)) <= 1e-10);

  const auto tight = temp_path("tight.json");
  REQUIRE(cli({"tighten", kSource + "/fixtures/orthonormal_basis.json", "--frame", "redundant", "--out", tight}).exit_code ==
          0);
  const auto eq = cli({"equiv", kSource + "/fixtures/orthonormal_basis.json", "--frame", "redundant", "--with",
                       "redundant_tight", "--other-file", tight});
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.find("relation: SIMILAR") != std::string::npos);
  std::remove(out.c_str());
  std::remove(tight.c_str());
}

TEST_CASE("dilate and expectation outputs") {
  const auto out = temp_path("dilate.json");
  REQUIRE(cli({"dilate", kSource + "/fixtures/orthonormal_basis.json", "--frame", "redundant", "--out", out}).exit_code == 0);
  const auto p = cframe::cli::read_problem(out);
  CHECK(p.rank == 3);
  CHECK(cframe::classify_frame(p.frame("redundant_combined")).is_riesz_basis);
  std::remove(out.c_str());

  const auto eout = temp_path("expectation.json");
  REQUIRE(cli({"expectation", "--kind", "unnormalized_trace", "--n", "3", "--out", eout}).exit_code == 0);
  const auto e = cframe::cli::read_problem(eout);
  CHECK(cframe::is_dual_pair(e.frame("u"), e.frame("v")));
  std::remove(eout.c_str());
}

TEST_CASE("generate is deterministic") {
  const auto a = temp_path("gen_a.json");
  const auto b = temp_path("gen_b.json");
  REQUIRE(cli({"generate", "--seed", "5", "--out", a}).exit_code == 0);
  REQUIRE(cli({"generate", "--seed", "5", "--out", b}).exit_code == 0);
  std::string ta, tb;
  REQUIRE(golden::read_text(a, ta));
  REQUIRE(golden::read_text(b, tb));
  CHECK(ta == tb);
  CHECK(cframe::cli::write_problem(cframe::cli::parse_problem(ta)) == ta);
  CHECK(cli({"analyze", a, "--frame", "random"}).exit_code == 0);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("exit codes") {
  const auto fx = kSource + "/fixtures/orthonormal_basis.json";
  CHECK(cli({}).exit_code == 2);
  CHECK(cli({"analyze", fx}).exit_code == 2);
  CHECK(cli({"analyze", fx, "--frame", "missing"}).exit_code == 2);
  CHECK(cli({"analyze", "/nonexistent/file.json", "--frame", "x"}).exit_code == 4);
  CHECK(cli({"equiv", fx, "--frame", "basis", "--with", "redundant"}).exit_code == 3);
  CHECK(cli({"magic", fx, "--frame", "basis"}).exit_code == 3);
  CHECK(cli({"dual", fx, "--frame", "basis", "--out", "/nonexistent/dir/out.json"}).exit_code == 4);
  CHECK(cli({"expectation", "--kind", "bogus", "--n", "2"}).exit_code == 2);
  CHECK(cli({"--help"}).exit_code == 0);
}

TEST_CASE("parse errors carry a location") {
  using cframe::cli::parse_problem;
  auto message = [](const std::string& text) {
    try {
      parse_problem(text);
    } catch (const cframe::Error& e) {
      CHECK(e.kind() == cframe::ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{\n  \"algebra\": ,\n}").find("line 2") != std::string::npos);
  CHECK(message(R"({"algebra": {"blocks": [2]}, "module": {"rank": 1}, "frames": {"f": [[[[[1, 0]]]]]}})")
            .find("frames.f[0][0][0]") != std::string::npos);
  CHECK(message(R"({"algebra": {"blocks": [1]}, "module": {"rank": 1}, "extra": 1})").find("unknown key") !=
        std::string::npos);
  CHECK(message(R"({"algebra": {"blocks": [1]}, "module": {"rank": 1, "projection": [[[[[[2, 0]]]]]]}})")
            .find("module.projection") != std::string::npos);
  CHECK(message(R"({"algebra": {"blocks": [1]}, "module": {"rank": 2, "projection": [[[[[[1, 0]]]], [[[[0, 0]]]]], [[[[[0, 0]]]], [[[[0, 0]]]]]]}, "frames": {"f": [[[[[[0, 0]]]], [[[[1, 0]]]]]]}})")
            .find("ElementOutsideModule") != std::string::npos);
}

TEST_CASE("number formatting") {
  using cframe::cli::format_number;
  CHECK(format_number(1e-13) == "0");
  CHECK(format_number(-1e-13) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.0) == "2");
  CHECK(cframe::cli::canonical_dump(nlohmann::json::parse("[[-0.0, 0.5]]")) == "[[0, 0.5]]\n");
}
