#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

ProjectiveModule rank_one_in_rank_two(std::size_t points, SplitMix64& rng) {
  // Pointwise projection onto the line spanned by (cos a_k, e^{i b_k} sin a_k).
  const auto spec = AlgebraSpec::commutative(points);
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < points; ++k) {
    const double a = 3.0 * rng.uniform();
    const Complex v0 = std::cos(a);
    const Complex v1 = std::polar(std::sin(a), 6.0 * rng.uniform());
    blocks.emplace_back(2, 2, std::vector<Complex>{v0 * std::conj(v0), v0 * std::conj(v1), v1 * std::conj(v0),
                                                   v1 * std::conj(v1)});
  }
  return make_projective_module(ModuleOperator(spec, 2, 2, std::move(blocks)));
}

}  // namespace

TEST_CASE("magic sum") {
  const auto spec = AlgebraSpec::commutative(4);
  const auto unit = free_frame(spec, 1, {ModuleElement::unit(spec, 1, 0)});
  CHECK(magic_sum(unit) == std::vector<std::int64_t>{1, 1, 1, 1});

  SplitMix64 rng{91};
  const auto module = rank_one_in_rank_two(5, rng);
  const auto f = tighten(oracle::random_frame(rng, module, 3));
  const auto g = tighten(oracle::random_frame(rng, module, 4));
  CHECK(magic_sum(f) == std::vector<std::int64_t>(5, 1));
  CHECK(magic_sum(g) == magic_sum(f));

  try {
    magic_sum(redundant_frame(AlgebraSpec({2})));
    FAIL("expected NotCommutative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCommutative);
  }
  try {
    magic_sum(redundant_frame(spec));
    FAIL("expected NotNormalizedTight");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalizedTight);
  }
}

TEST_CASE("hilbert-schmidt sums") {
  SplitMix64 rng{92};
  const auto module = rank_one_in_rank_two(6, rng);
  const auto spec = module.spec();
  const auto f = tighten(oracle::random_frame(rng, module, 3));
  const auto g = tighten(oracle::random_frame(rng, module, 5));

  CHECK(operator_norm(hs_sum(ModuleOperator::zero(spec, 2, 2), f)) == 0.0);
  const auto at_p = hs_sum(module.projection(), f);
  for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(at_p.block(k)(0, 0) - Complex(1.0)) < 1e-9);

  const auto t = oracle::random_operator(rng, spec, 2, 2);
  CHECK(distance(hs_sum(t, f), hs_sum(t, g)) <= 1e-9);
  CHECK(distance(hs_sum(t, f), hs_sum(t.adjoint(), f)) <= 1e-9);
  CHECK_THROWS_AS(hs_sum(ModuleOperator::identity(AlgebraSpec({2}), 2), redundant_frame(AlgebraSpec({2}))), Error);
}

TEST_CASE("conditional expectations") {
  SplitMix64 rng{93};
  for (auto kind : {ExpectationKind::diagonal, ExpectationKind::normalized_trace, ExpectationKind::unnormalized_trace}) {
    const ConditionalExpectation e(kind, 3);
    CMatrix x(3, 3);
    CMatrix a(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) x(r, c) = Complex(rng.symmetric(), rng.symmetric());
    // Positivity.
    const auto ex = e(x * x.adjoint());
    CHECK(jacobi_eigen(ex).values.front() >= -1e-12);
    // Bimodularity over the range: a in range(E).
    const auto b = e(x);
    CHECK((e(b * x) - b * e(x)).frobenius_norm() < 1e-12);
    CHECK((e(x * b) - e(x) * b).frobenius_norm() < 1e-12);
    if (kind != ExpectationKind::unnormalized_trace) CHECK((e(e(x)) - e(x)).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("quasi-bases") {
  SplitMix64 rng{94};
  for (auto kind : {ExpectationKind::diagonal, ExpectationKind::normalized_trace, ExpectationKind::unnormalized_trace}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const ConditionalExpectation e(kind, n);
      const auto qb = quasi_basis(e);
      CHECK(qb.u.size() == n * n);
      CMatrix x(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) x(r, c) = Complex(rng.symmetric(), rng.symmetric());
      CHECK(quasi_basis_residual(e, qb, x) <= 1e-12);
    }
  }
  const ConditionalExpectation e1(ExpectationKind::normalized_trace, 1);
  CHECK(quasi_basis(e1).u.front()(0, 0) == Complex(1.0));

  // Unscaled matrix units under the normalized trace give x / n.
  const ConditionalExpectation e2(ExpectationKind::normalized_trace, 2);
  QuasiBasis plain;
  plain.u = matrix_units(2);
  for (const auto& u : plain.u) plain.v.push_back(u.adjoint());
  CMatrix x(2, 2, {1.0, 2.0, 3.0, 4.0});
  CHECK(quasi_basis_residual(e2, plain, x) == doctest::Approx((0.5 * x).frobenius_norm()));
}

TEST_CASE("expectation module frames") {
  for (auto kind : {ExpectationKind::diagonal, ExpectationKind::normalized_trace, ExpectationKind::unnormalized_trace}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const ConditionalExpectation e(kind, n);
      const auto f = expectation_module_frame(e);
      CHECK(f.size() == n * n);
      CHECK(classify_frame(f).is_normalized_tight);
      CHECK(is_dual_pair(f, expectation_dual_frame(e)));
    }
  }
  const ConditionalExpectation e(ExpectationKind::normalized_trace, 2);
  const auto unscaled = classify_frame(expectation_frame(e, matrix_units(2)));
  CHECK(unscaled.is_tight);
  CHECK(unscaled.bounds.lower == doctest::Approx(0.5));
  CHECK(unscaled.bounds.upper == doctest::Approx(0.5));
}

TEST_CASE("encoded inner product is E(x* y)") {
  SplitMix64 rng{95};
  for (auto kind : {ExpectationKind::diagonal, ExpectationKind::normalized_trace, ExpectationKind::unnormalized_trace}) {
    const ConditionalExpectation e(kind, 3);
    CMatrix x(3, 3), y(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        x(r, c) = Complex(rng.symmetric(), rng.symmetric());
        y(r, c) = Complex(rng.symmetric(), rng.symmetric());
      }
    const auto ip = inner_product(encode_expectation_element(e, x), encode_expectation_element(e, y));
    CHECK(distance(ip, e.to_range(x.adjoint() * y)) < 1e-12);
  }
}

TEST_CASE("interval frame values") {
  CHECK(interval_frame_value(1, 1.0) == doctest::Approx(1.0));
  CHECK(std::pow(interval_frame_value(2, 0.4), 2) == doctest::Approx(0.4));
  CHECK(std::pow(interval_frame_value(3, 0.4), 2) == doctest::Approx(0.6));
  for (double t = 0.01; t <= 1.0; t += 0.0137) {
    double sum = 0.0;
    for (std::size_t j = 1; j <= 101; ++j) sum += std::pow(interval_frame_value(j, t), 2);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sampled interval frame") {
  const auto f = sampled_interval_frame({1.0}, 1);
  CHECK(f.element(0).block(0)(0, 0) == Complex(1.0));

  const std::vector<double> grid{0.05, 0.2, 0.4, 0.77, 1.0};
  const auto g = sampled_interval_frame(grid, required_interval_terms(grid));
  const auto b = frame_bounds(g);
  CHECK(std::abs(b.lower - 1.0) <= 1e-10);
  CHECK(std::abs(b.upper - 1.0) <= 1e-10);

  // Appending f(t) = t.
  std::vector<CMatrix> blocks;
  for (double t : grid) blocks.emplace_back(1, 1, std::vector<Complex>{t});
  auto xs = g.elements();
  xs.insert(xs.begin(), ModuleElement(g.spec(), 1, blocks));
  const auto b2 = frame_bounds(ModuleFrame(g.module(), xs));
  CHECK(std::abs(b2.lower - (0.05 * 0.05 + 1.0)) <= 1e-10);
  CHECK(std::abs(b2.upper - 2.0) <= 1e-10);

  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  CHECK(kind_of([] { sampled_interval_frame({0.0, 0.5}, 10); }) == ErrorKind::GridOutOfRange);
  CHECK(kind_of([] { sampled_interval_frame({0.5, 1.5}, 10); }) == ErrorKind::GridOutOfRange);
  CHECK(kind_of([] { sampled_interval_frame({0.5, 0.4}, 10); }) == ErrorKind::GridOutOfRange);
  CHECK(kind_of([] { sampled_interval_frame({0.4}, 2); }) == ErrorKind::InsufficientJ);
}
