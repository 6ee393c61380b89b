#include "cframe/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "cframe/applications.hpp"
#include "cframe/cli/problem_file.hpp"
#include "cframe/cli/report.hpp"
#include "cframe/dilation.hpp"
#include "cframe/error.hpp"
#include "cframe/oracle.hpp"

namespace cframe::cli {

namespace {

struct Options {
  std::string file;
  std::string frame;
  std::string with;
  std::string other_file;
  std::string out;
  std::string mode = "auto";
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double tol = kFrameTol;
  bool json = false;
};

double max_difference(const ModuleFrame& f, const ModuleFrame& g) {
  double d = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) d = std::max(d, module_norm(f.element(j) - g.element(j)));
  return d;
}

void add_bounds(Report& r, const std::string& prefix, const FrameBounds& b) {
  r.add(prefix + "lower_bound", b.lower);
  r.add(prefix + "upper_bound", b.upper);
}

void add_header(Report& r, const std::string& command, const Options& o) {
  r.add("command", command);
  if (!o.frame.empty()) r.add("frame", o.frame);
}

ProblemFile fragment(const ProblemFile& base, const std::map<std::string, std::vector<ModuleElement>>& frames) {
  ProblemFile out;
  out.spec = base.spec;
  out.rank = base.rank;
  out.projection = base.projection;
  out.frames = frames;
  return out;
}

void maybe_write(const Options& o, const ProblemFile& p, Report& r) {
  if (o.out.empty()) return;
  write_file(o.out, write_problem(p));
  r.add("output", o.out);
}

std::vector<double> projection_eigenvalues(const ModuleOperator& p) {
  std::vector<double> values;
  for (const auto& ev : hermitian_eigen(p.as_algebra_element()).eigenvalues)
    for (double v : ev) values.push_back(v);
  std::sort(values.begin(), values.end());
  return values;
}

double projection_trace(const ModuleOperator& p) {
  double t = 0.0;
  for (const auto& b : p.blocks())
    for (std::size_t k = 0; k < b.rows(); ++k) t += b(k, k).real();
  return t;
}

// ------------------------------------------------------------------ commands

Report cmd_analyze(const Options& o, bool& rejected) {
  const auto problem = read_problem(o.file);
  const auto frame = problem.frame(o.frame);
  const auto a = classify_frame(frame, o.tol);
  Report r;
  add_header(r, "analyze", o);
  r.add("elements", static_cast<std::int64_t>(frame.size()));
  add_bounds(r, "", a.bounds);
  r.add("vacuous", a.is_vacuous);
  r.add("is_frame", a.is_frame);
  r.add("tight", a.is_tight);
  r.add("normalized_tight", a.is_normalized_tight);
  r.add("orthogonal", a.is_orthogonal);
  r.add("projection_valued", a.inner_products_are_projections);
  r.add("riesz_basis", a.is_riesz_basis);
  r.add("orthonormal_basis", a.is_orthonormal_basis);
  if (a.is_normalized_tight) {
    bool bounded = true;
    const auto one = AlgebraElement::identity(frame.spec());
    for (const auto& x : frame.elements()) bounded = bounded && is_positive(one - inner_product(x, x), o.tol);
    r.add("elements_bounded_by_one", bounded);
  }
  rejected = !a.is_frame;
  return r;
}

Report cmd_dual(const Options& o) {
  const auto problem = read_problem(o.file);
  const auto frame = problem.frame(o.frame);
  const auto dual = canonical_dual(frame);
  Report r;
  add_header(r, "dual", o);
  r.add("result", o.frame + "_dual");
  add_bounds(r, "dual_", frame_bounds(dual));
  r.add("dual_pair", is_dual_pair(frame, dual, o.tol));
  r.add("max_difference", max_difference(frame, dual));
  maybe_write(o, fragment(problem, {{o.frame + "_dual", dual.elements()}}), r);
  return r;
}

Report cmd_tighten(const Options& o) {
  const auto problem = read_problem(o.file);
  const auto frame = problem.frame(o.frame);
  const auto tight = tighten(frame);
  const auto a = classify_frame(tight, o.tol);
  Report r;
  add_header(r, "tighten", o);
  r.add("result", o.frame + "_tight");
  add_bounds(r, "input_", frame_bounds(frame));
  add_bounds(r, "", a.bounds);
  r.add("normalized_tight", a.is_normalized_tight);
  r.add("max_difference", max_difference(frame, tight));
  maybe_write(o, fragment(problem, {{o.frame + "_tight", tight.elements()}}), r);
  return r;
}

Report cmd_dilate(const Options& o) {
  const auto problem = read_problem(o.file);
  const auto frame = problem.frame(o.frame);
  std::string mode = o.mode;
  if (mode == "auto") mode = classify_frame(frame, o.tol).is_normalized_tight ? "complement" : "riesz";
  if (mode != "complement" && mode != "riesz") throw Error(ErrorKind::ParseError, "--mode must be auto, complement or riesz");
  const auto d = mode == "complement" ? complement_frame(frame) : riesz_dilation(frame);
  Report r;
  add_header(r, "dilate", o);
  r.add("mode", mode);
  r.add("ambient_rank", static_cast<std::int64_t>(frame.size()));
  r.add("projection_trace", projection_trace(d.ambient.projection()));
  r.add("gram_residual", d.gram_residual);
  add_bounds(r, "combined_", d.combined_bounds);
  r.add("combined_riesz_basis", classify_frame(d.combined, o.tol).is_riesz_basis);
  if (!o.out.empty()) {
    ProblemFile out;
    out.spec = problem.spec;
    out.rank = frame.size();
    out.frames = {{o.frame + "_embedded", d.embedded.elements()},
                  {o.frame + "_complement", d.complement.elements()},
                  {o.frame + "_combined", d.combined.elements()}};
    maybe_write(o, out, r);
  }
  return r;
}

Report cmd_equiv(const Options& o) {
  const auto problem = read_problem(o.file);
  const auto f = problem.frame(o.frame);
  const auto other = o.other_file.empty() ? problem : read_problem(o.other_file);
  const auto g = other.frame(o.with);
  const bool similar = are_equivalent(f, g, EquivalenceMode::similar);
  const bool unitary = similar && classify_frame(f, o.tol).is_normalized_tight &&
                       classify_frame(g, o.tol).is_normalized_tight &&
                       are_equivalent(f, g, EquivalenceMode::unitary);
  const auto pf = similarity_projection(f);
  const auto pg = similarity_projection(g);
  Report r;
  add_header(r, "equiv", o);
  r.add("with", o.with);
  r.add("relation", std::string(unitary ? "UNITARY" : similar ? "SIMILAR" : "DISTINCT"));
  r.add("projection_distance", (pf - pg).norm());
  r.add("frame_projection_trace", projection_trace(pf));
  r.add("frame_projection_eigenvalues", projection_eigenvalues(pf));
  r.add("with_projection_trace", projection_trace(pg));
  r.add("with_projection_eigenvalues", projection_eigenvalues(pg));
  return r;
}

Report cmd_magic(const Options& o) {
  const auto problem = read_problem(o.file);
  const auto frame = problem.frame(o.frame);
  Report r;
  add_header(r, "magic", o);
  r.add("magic", magic_sum(frame));
  return r;
}

ExpectationKind parse_kind(const std::string& k) {
  if (k == "diagonal") return ExpectationKind::diagonal;
  if (k == "normalized_trace") return ExpectationKind::normalized_trace;
  if (k == "unnormalized_trace") return ExpectationKind::unnormalized_trace;
  throw Error(ErrorKind::ParseError, "--kind must be diagonal, normalized_trace or unnormalized_trace");
}

Report cmd_expectation(const Options& o) {
  if (o.n == 0) throw Error(ErrorKind::ParseError, "--n must be positive");
  const ConditionalExpectation e(parse_kind(o.kind), o.n);
  const auto qb = quasi_basis(e);
  SplitMix64 rng{o.seed};
  CMatrix probe(o.n, o.n);
  for (std::size_t r = 0; r < o.n; ++r)
    for (std::size_t c = 0; c < o.n; ++c) probe(r, c) = Complex(rng.symmetric(), rng.symmetric());
  const auto u = expectation_module_frame(e);
  const auto v = expectation_dual_frame(e);
  const auto a = classify_frame(u, o.tol);
  const double scale = e.kind() == ExpectationKind::normalized_trace ? std::sqrt(static_cast<double>(o.n)) : 1.0;

  Report r;
  r.add("command", std::string("expectation"));
  r.add("kind", o.kind);
  r.add("n", static_cast<std::int64_t>(o.n));
  r.add("quasi_basis", "u_ij = " + format_number(scale) + " e_ij, v_ij = u_ij*");
  r.add("elements", static_cast<std::int64_t>(qb.u.size()));
  r.add("seed", static_cast<std::int64_t>(o.seed));
  r.add("identity_residual", quasi_basis_residual(e, qb, probe));
  add_bounds(r, "", a.bounds);
  r.add("normalized_tight", a.is_normalized_tight);
  r.add("dual_pair", is_dual_pair(u, v, o.tol));
  if (!o.out.empty()) {
    ProblemFile out;
    out.spec = e.range_spec();
    out.rank = u.ambient_rank();
    out.frames = {{"u", u.elements()}, {"v", v.elements()}};
    maybe_write(o, out, r);
  }
  return r;
}

Report cmd_generate(const Options& o) {
  const auto inst = oracle::random_instance(o.seed, oracle::Limits{});
  ProblemFile p;
  p.spec = inst.spec;
  p.rank = inst.module.ambient_rank();
  p.projection = inst.module.projection();
  p.frames = {{"random", inst.frame.elements()}};
  Report r;
  r.add("command", std::string("generate"));
  r.add("seed", static_cast<std::int64_t>(o.seed));
  std::vector<std::int64_t> blocks(inst.spec.blocks().begin(), inst.spec.blocks().end());
  r.add("blocks", blocks);
  r.add("rank", static_cast<std::int64_t>(p.rank));
  r.add("elements", static_cast<std::int64_t>(inst.frame.size()));
  add_bounds(r, "", frame_bounds(inst.frame));
  maybe_write(o, p, r);
  return r;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kInputError;
    case ErrorKind::IoError: return kIoError;
    default: return kMathError;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Module frames over finite-dimensional C*-algebras", "cframe"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Classification tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "Print the report as JSON");
  };
  auto add_frame_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Problem file")->required();
    sub->add_option("--frame", o.frame, "Frame name")->required();
    add_common(sub);
    return sub;
  };

  bool rejected = false;
  std::function<Report()> handler;

  auto* analyze = add_frame_command("analyze", "Bounds and classification flags");
  analyze->callback([&] { handler = [&] { return cmd_analyze(o, rejected); }; });
  auto* dual = add_frame_command("dual", "Canonical dual frame");
  dual->add_option("--out", o.out, "Write the dual as a problem file");
  dual->callback([&] { handler = [&] { return cmd_dual(o); }; });
  auto* tight = add_frame_command("tighten", "Normalized tight frame in the same similarity class");
  tight->add_option("--out", o.out, "Write the tightened frame as a problem file");
  tight->callback([&] { handler = [&] { return cmd_tighten(o); }; });
  auto* dilate = add_frame_command("dilate", "Complementary frame or Riesz dilation");
  dilate->add_option("--mode", o.mode, "auto, complement or riesz");
  dilate->add_option("--out", o.out, "Write embedded, complement and combined families");
  dilate->callback([&] { handler = [&] { return cmd_dilate(o); }; });
  auto* equiv = add_frame_command("equiv", "Compare similarity classes of two frames");
  equiv->add_option("--with", o.with, "Second frame name")->required();
  equiv->add_option("--other-file", o.other_file, "Read the second frame from another file");
  equiv->callback([&] { handler = [&] { return cmd_equiv(o); }; });
  auto* magic = add_frame_command("magic", "Pointwise ranks from a normalized tight frame");
  magic->callback([&] { handler = [&] { return cmd_magic(o); }; });

  auto* expectation = app.add_subcommand("expectation", "Quasi-basis of a conditional expectation on M_n");
  expectation->add_option("--kind", o.kind, "diagonal, normalized_trace or unnormalized_trace")->required();
  expectation->add_option("--n", o.n, "Matrix size")->required();
  expectation->add_option("--seed", o.seed, "Seed of the verification probe");
  expectation->add_option("--out", o.out, "Write the frames u and v as a problem file");
  add_common(expectation);
  expectation->callback([&] { handler = [&] { return cmd_expectation(o); }; });

  auto* generate = app.add_subcommand("generate", "Random problem file");
  generate->add_option("--seed", o.seed, "Generator seed");
  generate->add_option("--out", o.out, "Output path");
  add_common(generate);
  generate->callback([&] { handler = [&] { return cmd_generate(o); }; });

  std::string format_out;
  auto* format = app.add_subcommand("format", "Rewrite a problem file in canonical form");
  format->add_option("file", o.file, "Problem file")->required();
  format->add_option("--out", format_out, "Output path (default: stdout)");
  bool formatting = false;
  format->callback([&] { formatting = true; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (formatting) {
      const auto text = write_problem(read_problem(o.file));
      if (format_out.empty()) {
        out << text;
      } else {
        write_file(format_out, text);
      }
      return kOk;
    }
    const Report report = handler();
    if (o.json) {
      out << report.json().dump(2) << "\n";
    } else {
      out << report.text();
    }
    if (rejected) {
      err << "error: NotAFrame: lower frame bound is zero\n";
      return kMathError;
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace cframe::cli
