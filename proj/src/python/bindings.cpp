#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cframe/applications.hpp"
#include "cframe/cli/commands.hpp"
#include "cframe/cli/problem_file.hpp"
#include "cframe/dilation.hpp"
#include "cframe/error.hpp"
#include "cframe/oracle.hpp"

namespace py = pybind11;
using namespace cframe;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CMatrix to_cmatrix(const ComplexArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::ShapeMismatch, "expected a 2-d array");
  const auto r = a.unchecked<2>();
  CMatrix m(static_cast<std::size_t>(r.shape(0)), static_cast<std::size_t>(r.shape(1)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i)
    for (py::ssize_t j = 0; j < r.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

ComplexArray to_array(const CMatrix& m) {
  ComplexArray out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

std::vector<CMatrix> to_blocks(const std::vector<ComplexArray>& arrays) {
  std::vector<CMatrix> out;
  for (const auto& a : arrays) out.push_back(to_cmatrix(a));
  return out;
}

std::vector<ComplexArray> from_blocks(const std::vector<CMatrix>& blocks) {
  std::vector<ComplexArray> out;
  for (const auto& b : blocks) out.push_back(to_array(b));
  return out;
}

ModuleFrame make_frame(const std::vector<std::size_t>& blocks, std::size_t rank,
                       const std::vector<std::vector<ComplexArray>>& elements,
                       const std::optional<std::vector<ComplexArray>>& projection) {
  const AlgebraSpec spec(blocks);
  auto module = projection ? make_projective_module(ModuleOperator(spec, rank, rank, to_blocks(*projection)))
                           : free_module(spec, rank);
  std::vector<ModuleElement> xs;
  for (const auto& e : elements) xs.emplace_back(spec, rank, to_blocks(e));
  return ModuleFrame(std::move(module), std::move(xs));
}

py::dict analysis_dict(const FrameAnalysis& a) {
  py::dict d;
  d["lower_bound"] = a.bounds.lower;
  d["upper_bound"] = a.bounds.upper;
  d["vacuous"] = a.is_vacuous;
  d["is_frame"] = a.is_frame;
  d["tight"] = a.is_tight;
  d["normalized_tight"] = a.is_normalized_tight;
  d["orthogonal"] = a.is_orthogonal;
  d["projection_valued"] = a.inner_products_are_projections;
  d["riesz_basis"] = a.is_riesz_basis;
  d["orthonormal_basis"] = a.is_orthonormal_basis;
  return d;
}

ExpectationKind parse_kind(const std::string& s) {
  if (s == "diagonal") return ExpectationKind::diagonal;
  if (s == "normalized_trace") return ExpectationKind::normalized_trace;
  if (s == "unnormalized_trace") return ExpectationKind::unnormalized_trace;
  throw Error(ErrorKind::ParseError, "unknown expectation kind " + s);
}

}  // namespace

PYBIND11_MODULE(_cframe, m) {
  m.doc() = "Module frames over finite-dimensional C*-algebras";

  static py::exception<Error> error(m, "CframeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(error_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<ModuleFrame>(m, "Frame")
      .def(py::init(&make_frame), py::arg("blocks"), py::arg("rank"), py::arg("elements"),
           py::arg("projection") = py::none())
      .def_property_readonly("blocks", [](const ModuleFrame& f) { return f.spec().blocks(); })
      .def_property_readonly("rank", &ModuleFrame::ambient_rank)
      .def("__len__", &ModuleFrame::size)
      .def("element", [](const ModuleFrame& f, std::size_t j) { return from_blocks(f.element(j).blocks()); })
      .def("projection", [](const ModuleFrame& f) { return from_blocks(f.module().projection().blocks()); })
      .def("bounds", [](const ModuleFrame& f) {
        const auto b = frame_bounds(f);
        return py::make_tuple(b.lower, b.upper);
      })
      .def("classify", [](const ModuleFrame& f, double tol) { return analysis_dict(classify_frame(f, tol)); },
           py::arg("tol") = kFrameTol)
      .def("canonical_dual", &canonical_dual)
      .def("tighten", &tighten)
      .def("is_dual_pair", [](const ModuleFrame& f, const ModuleFrame& g, double tol) { return is_dual_pair(f, g, tol); },
           py::arg("other"), py::arg("tol") = kFrameTol)
      .def("equivalent",
           [](const ModuleFrame& f, const ModuleFrame& g, bool unitary) {
             return are_equivalent(f, g, unitary ? EquivalenceMode::unitary : EquivalenceMode::similar);
           },
           py::arg("other"), py::arg("unitary") = false)
      .def("complement", [](const ModuleFrame& f) { return complement_frame(f).complement; })
      .def("magic_sum", &magic_sum);

  m.def("load_frame", [](const std::string& path, const std::string& name) { return cli::read_problem(path).frame(name); },
        py::arg("path"), py::arg("name"));
  m.def("random_frame", [](std::uint64_t seed) { return oracle::random_instance(seed, oracle::Limits{}).frame; },
        py::arg("seed"));
  m.def("brute_force_bounds", [](const ModuleFrame& f) {
    const auto b = oracle::brute_force_bounds(f);
    return py::make_tuple(b.lower, b.upper);
  });
  m.def("interval_frame", &sampled_interval_frame, py::arg("grid"), py::arg("terms"));
  m.def("expectation_frames", [](const std::string& kind, std::size_t n) {
    const ConditionalExpectation e(parse_kind(kind), n);
    return py::make_tuple(expectation_module_frame(e), expectation_dual_frame(e));
  }, py::arg("kind"), py::arg("n"));
  m.def("quasi_basis_residual", [](const std::string& kind, std::size_t n, const ComplexArray& x) {
    const ConditionalExpectation e(parse_kind(kind), n);
    return quasi_basis_residual(e, quasi_basis(e), to_cmatrix(x));
  }, py::arg("kind"), py::arg("n"), py::arg("x"));
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
