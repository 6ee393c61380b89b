#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

ModuleOperator gram_matrix(const std::vector<ModuleElement>& xs) {
  const auto x = ModuleOperator::from_rows(xs.front().spec(), xs.front().length(), xs);
  return x * x.adjoint();
}

ModuleOperator half_ones() {
  const AlgebraSpec spec({1});
  const auto h = AlgebraElement::scalar(spec, 0.5);
  return ModuleOperator::from_entries(spec, {{h, h}, {h, h}});
}

}  // namespace

TEST_CASE("complement of an orthonormal basis is zero") {
  const AlgebraSpec spec({2, 1});
  const auto r = complement_frame(free_frame(spec, 3, orthonormal_basis(3, spec)));
  for (const auto& y : r.complement.elements()) CHECK(module_norm(y) < 1e-12);
  CHECK(r.gram_residual < 1e-12);
}

TEST_CASE("complement of the half frame") {
  const double h = std::sqrt(0.5);
  const auto r = complement_frame(scalar_frame({h, h}));
  const AlgebraSpec spec({1});
  CHECK(distance(r.ambient.projection(), half_ones()) < 1e-12);
  CHECK(distance(r.complement.element(0), scalar_tuple(spec, {0.5, -0.5})) < 1e-12);
  CHECK(distance(r.complement.element(1), scalar_tuple(spec, {-0.5, 0.5})) < 1e-12);
  CHECK(r.gram_residual < 1e-12);
  CHECK(classify_frame(r.complement).is_normalized_tight);
}

TEST_CASE("complement on random tight frames") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = tighten(oracle::random_instance(seed, kSuiteLimits).frame);
    const auto r = complement_frame(f);
    CHECK(r.gram_residual <= 1e-9);
    CHECK(distance(gram_matrix(r.combined.elements()), ModuleOperator::identity(f.spec(), f.size())) <= 1e-9);
    // P(e_j) = theta(x_j).
    const auto t = frame_transform(f);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(distance(r.embedded.element(j), t.analyze(f.element(j))) < 1e-9);
    // Complement of the complement lands back on P.
    const auto back = complement_frame(r.complement);
    CHECK(distance(back.ambient.projection(), ModuleOperator::identity(f.spec(), f.size()) - r.ambient.projection()) <
          1e-8);
    CHECK(distance(similarity_projection(back.complement), r.ambient.projection()) < 1e-8);
  }
}

TEST_CASE("complements of unitarily equivalent frames coincide") {
  const auto f = tighten(oracle::random_instance(3, kSuiteLimits).frame);
  SplitMix64 rng{71};
  const auto n = f.ambient_rank();
  const auto t = oracle::random_operator(rng, f.spec(), n, n);
  const auto root = functional_calculus((t.adjoint() * t).as_algebra_element(), SpectralFunction::inv_sqrt, 1e-12);
  const auto u = t * ModuleOperator::from_algebra_element(root, f.spec(), n);
  CHECK(distance(u * u.adjoint(), ModuleOperator::identity(f.spec(), n)) < 1e-9);

  const auto& p = f.module().projection();
  std::vector<ModuleElement> rotated;
  for (const auto& x : f.elements()) rotated.push_back(apply_operator(u, x));
  const ModuleFrame g(make_projective_module(u.adjoint() * p * u), rotated);
  const auto cf = complement_frame(f);
  const auto cg = complement_frame(g);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& y = cf.complement.element(j);
    const auto& z = cg.complement.element(j);
    CHECK(distance(inner_product(y, y), inner_product(z, z)) < 1e-9);
    CHECK(distance(y, z) < 1e-9);
  }
}

TEST_CASE("complement rejects non tight frames") {
  try {
    complement_frame(redundant_frame(AlgebraSpec({1})));
    FAIL("expected NotNormalizedTight");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalizedTight);
  }
}

TEST_CASE("riesz dilation") {
  const AlgebraSpec spec({2, 1});
  const auto r = riesz_dilation(redundant_frame(spec));
  CHECK(classify_frame(r.combined).is_riesz_basis);
  CHECK(r.combined_bounds.lower == doctest::Approx(1.0));
  CHECK(r.combined_bounds.upper == doctest::Approx(2.0));

  const auto tight = tighten(oracle::random_instance(1, kSuiteLimits).frame);
  const auto rt = riesz_dilation(tight);
  const auto ct = complement_frame(tight);
  CHECK(frame_distance(rt.combined, ct.combined) < 1e-9);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = oracle::random_instance(seed, kSuiteLimits).frame;
    const auto b = frame_bounds(f);
    const auto d = riesz_dilation(f);
    CHECK(std::abs(d.combined_bounds.lower - b.lower) <= 1e-8 * std::max(1.0, b.upper));
    CHECK(std::abs(d.combined_bounds.upper - b.upper) <= 1e-8 * std::max(1.0, b.upper));
    // The input frame is recovered from the first components.
    const auto t = tighten(f).synthesis_matrix();
    for (std::size_t j = 0; j < f.size(); ++j)
      CHECK(distance(apply_operator(t, d.embedded.element(j)), f.element(j)) < 1e-8);
  }

  const auto e = orthonormal_basis(2, AlgebraSpec({1}));
  CHECK_THROWS_AS(riesz_dilation(free_frame(AlgebraSpec({1}), 2, {e[0], e[0]})), Error);
}

TEST_CASE("similarity projections") {
  const AlgebraSpec spec({2});
  const auto basis = free_frame(spec, 2, orthonormal_basis(2, spec));
  CHECK(distance(similarity_projection(basis), ModuleOperator::identity(spec, 2)) < 1e-12);

  const double h = std::sqrt(0.5);
  CHECK(distance(similarity_projection(scalar_frame({h, h})), half_ones()) < 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = oracle::random_instance(seed, kSuiteLimits).frame;
    CHECK(distance(similarity_projection(f), similarity_projection(tighten(f))) < 1e-9);
  }
}

TEST_CASE("equivalence") {
  const double h = std::sqrt(0.5);
  const auto half = scalar_frame({h, h});
  const auto axis = scalar_frame({1.0, 0.0});
  CHECK(are_equivalent(half, half, EquivalenceMode::similar));
  CHECK(are_equivalent(half, half, EquivalenceMode::unitary));
  CHECK_FALSE(are_equivalent(half, axis, EquivalenceMode::similar));
  CHECK_FALSE(are_equivalent(half, axis, EquivalenceMode::unitary));

  const auto f = oracle::random_instance(9, kSuiteLimits).frame;
  CHECK(are_equivalent(f, tighten(f), EquivalenceMode::similar));
  try {
    are_equivalent(f, tighten(f), EquivalenceMode::unitary);
    FAIL("expected NotNormalizedTight");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalizedTight);
  }
  CHECK_THROWS_AS(are_equivalent(half, scalar_frame({1.0}), EquivalenceMode::similar), Error);

  // Similarity is transitive: scaling and tightening stay in the class.
  std::vector<ModuleElement> scaled;
  for (const auto& x : f.elements()) scaled.push_back(Complex(3.0) * x);
  const ModuleFrame g(f.module(), scaled);
  CHECK(are_equivalent(f, g, EquivalenceMode::similar));
  CHECK(are_equivalent(g, tighten(f), EquivalenceMode::similar));
}

TEST_CASE("average of two bases") {
  const AlgebraSpec spec({2, 1});
  const auto basis = free_frame(spec, 2, orthonormal_basis(2, spec));
  const auto [b1, b2] = average_of_bases(basis);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(distance(b1[j], basis.element(j)) < 1e-12);
    CHECK(distance(b2[j], basis.element(j)) < 1e-12);
  }

  const double h = std::sqrt(0.5);
  const auto half = scalar_frame({h, h});
  const auto [c1, c2] = average_of_bases(half);
  const AlgebraSpec one({1});
  CHECK(distance(c2[0], scalar_tuple(one, {0.0, 1.0})) < 1e-12);
  CHECK(distance(c2[1], scalar_tuple(one, {1.0, 0.0})) < 1e-12);
  const auto t = frame_transform(half);
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(distance(Complex(0.5) * (c1[j] + c2[j]), t.analyze(half.element(j))) <= 1e-12);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = tighten(oracle::random_instance(seed, kSuiteLimits).frame);
    const auto [d1, d2] = average_of_bases(f);
    const auto id = ModuleOperator::identity(f.spec(), f.size());
    CHECK(distance(gram_matrix(d1), id) < 1e-9);
    CHECK(distance(gram_matrix(d2), id) < 1e-9);
  }
  CHECK_THROWS_AS(average_of_bases(redundant_frame(one)), Error);
}

TEST_CASE("compression by partial isometries") {
  const AlgebraSpec spec({2, 1});
  const auto e = orthonormal_basis(2, spec);
  const auto id = ModuleOperator::identity(spec, 2);
  const auto same = compress_by_partial_isometry(e, id);
  for (std::size_t j = 0; j < 2; ++j) CHECK(distance(same.element(j), e[j]) < 1e-14);

  SplitMix64 rng{81};
  const auto p = oracle::random_projection(rng, spec, 2);
  const auto projected = compress_by_partial_isometry(e, p);
  CHECK(classify_frame(projected).is_normalized_tight);

  // e1 -> e2, e2 -> 0.
  const auto one = AlgebraElement::identity(spec);
  const auto nil = AlgebraElement::zero(spec);
  const auto v = ModuleOperator::from_entries(spec, {{nil, one}, {nil, nil}});
  const auto moved = compress_by_partial_isometry(e, v);
  CHECK(distance(moved.element(0), e[1]) < 1e-14);
  CHECK(module_norm(moved.element(1)) < 1e-14);
  CHECK(classify_frame(moved).is_normalized_tight);

  try {
    compress_by_partial_isometry(e, Complex(2.0) * id);
    FAIL("expected NotAPartialIsometry");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotAPartialIsometry);
  }
  try {
    compress_by_partial_isometry({e[0], e[0]}, id);
    FAIL("expected NotOrthonormalBasis");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotOrthonormalBasis);
  }
}
