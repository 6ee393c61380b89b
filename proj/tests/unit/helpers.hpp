#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "cframe/applications.hpp"
#include "cframe/dilation.hpp"
#include "cframe/error.hpp"
#include "cframe/frame.hpp"
#include "cframe/oracle.hpp"

namespace testing {

using namespace cframe;

inline AlgebraElement m2(Complex a, Complex b, Complex c, Complex d) {
  return AlgebraElement(AlgebraSpec({2}), {CMatrix(2, 2, {a, b, c, d})});
}

inline AlgebraElement point_values(std::initializer_list<Complex> values) {
  std::vector<CMatrix> blocks;
  for (auto v : values) blocks.emplace_back(1, 1, std::vector<Complex>{v});
  return AlgebraElement(AlgebraSpec::commutative(values.size()), std::move(blocks));
}

inline ModuleElement tuple(const AlgebraSpec& spec, std::initializer_list<AlgebraElement> entries) {
  return ModuleElement::from_entries(spec, std::vector<AlgebraElement>(entries));
}

inline ModuleElement scalar_tuple(const AlgebraSpec& spec, std::initializer_list<Complex> values) {
  std::vector<AlgebraElement> entries;
  for (auto v : values) entries.push_back(AlgebraElement::scalar(spec, v));
  return ModuleElement::from_entries(spec, entries);
}

inline double distance(const AlgebraElement& a, const AlgebraElement& b) { return operator_norm(a - b); }
inline double distance(const ModuleElement& a, const ModuleElement& b) { return module_norm(a - b); }
inline double distance(const ModuleOperator& a, const ModuleOperator& b) { return (a - b).norm(); }

inline double frame_distance(const ModuleFrame& f, const ModuleFrame& g) {
  double d = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) d = std::max(d, distance(f.element(j), g.element(j)));
  return d;
}

inline ModuleFrame free_frame(const AlgebraSpec& spec, std::size_t n, std::vector<ModuleElement> xs) {
  return ModuleFrame(free_module(spec, n), std::move(xs));
}

/// {e1, e1, e2} in A^2.
inline ModuleFrame redundant_frame(const AlgebraSpec& spec) {
  const auto e = orthonormal_basis(2, spec);
  return free_frame(spec, 2, {e[0], e[0], e[1]});
}

inline ModuleFrame scalar_frame(std::initializer_list<Complex> values) {
  const AlgebraSpec spec({1});
  std::vector<ModuleElement> xs;
  for (auto v : values) xs.push_back(scalar_tuple(spec, {v}));
  return free_frame(spec, 1, std::move(xs));
}

inline const oracle::Limits kSuiteLimits{3, 3, 4, 6};

}  // namespace testing
