#include "doctest.h"
#include "support.hpp"

#include "annulus/constructions.hpp"
#include "annulus/error.hpp"
#include "annulus/io.hpp"

using namespace annulus;
using namespace testing;

namespace {

RationalMap cubic6() { return parse_map(fixture("cubic6.map")); }

std::vector<std::pair<Rational, Rational>> exact_pairs(const SphereSpectrum& sp) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& p : sp.isolated)
    if (p.s.exact && p.t) out.emplace_back(*p.s.exact, *p.t);
  return out;
}

UPoly power(unsigned d) {
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  return UPoly(c);
}

}  // namespace

TEST_CASE("sphere certificates") {
  RationalMap h2 = homogeneous_map(2, 2);
  auto c = maps_sphere_to_sphere(h2, 1, 1);
  REQUIRE(c);
  CHECK(c->quotient * HermitianForm::sphere(2, 1) == sphere_defect(h2, 1));

  RationalMap f = cubic6();
  auto inner = maps_sphere_to_sphere(f, make_rational(1, 4), make_rational(1, 16));
  REQUIRE(inner);
  CHECK(inner->quotient * HermitianForm::sphere(2, make_rational(1, 4)) == sphere_defect(f, make_rational(1, 16)));

  for (long num = 1; num <= 40; ++num)
    CHECK(!maps_sphere_to_sphere(f, make_rational(1, 9), make_rational(num, 40)));

  CHECK_THROWS_AS(maps_sphere_to_sphere(f, 0, 1), Error);
  CHECK_THROWS_AS(maps_sphere_to_sphere(f, 1, -1), Error);
}

TEST_CASE("invariant spheres of the degree-3 example are exactly (1,1) and (1/4,1/16)") {
  SphereSpectrum sp = invariant_spheres(cubic6());
  CHECK(!sp.continuum);
  REQUIRE(sp.isolated.size() == 2);
  auto pairs = exact_pairs(sp);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<Rational, Rational>{1, 1});
  CHECK(pairs[1] == std::pair<Rational, Rational>{make_rational(1, 4), make_rational(1, 16)});
  for (const auto& p : sp.isolated) CHECK(p.certified);
  // 4s^2 - 5s + 1 up to a scalar
  UPoly expected(std::vector<Rational>{Rational(1), Rational(-5), Rational(4)});
  CHECK(sp.eliminant.monic() == expected.monic());
}

TEST_CASE("homogeneous maps have the continuum s^d") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned d = 1; d <= 4; ++d) {
      SphereSpectrum sp = invariant_spheres(homogeneous_map(n, d));
      REQUIRE(sp.continuum);
      UPoly num = sp.continuum->numerator, den = sp.continuum->denominator;
      REQUIRE(num == power(d) * den);
    }
}

TEST_CASE("juxtaposition of H1 and H2 with weight 1/2 has continuum (s + s^2)/2") {
  RationalMap j = juxtapose(homogeneous_map(2, 1), homogeneous_map(2, 2), make_rational(1, 2));
  SphereSpectrum sp = invariant_spheres(j);
  REQUIRE(sp.continuum);
  UPoly expect(std::vector<Rational>{Rational(0), make_rational(1, 2), make_rational(1, 2)});
  CHECK(sp.continuum->numerator == expect * sp.continuum->denominator);
}

TEST_CASE("certified pairs agree with point evaluation on the sphere") {
  std::mt19937_64 rng(51);
  RationalMap f = cubic6();
  for (int k = 0; k < 200; ++k) {
    auto z = sphere_point(rng, 2, 0.25);
    REQUIRE(std::abs(map_norm2(f, z) - 1.0 / 16) < 1e-12);
    auto w = sphere_point(rng, 2, 1.0);
    REQUIRE(std::abs(map_norm2(f, w) - 1.0) < 1e-12);
  }
  // at s = 1/9 the norm is not constant
  double lo = 1e9, hi = -1e9;
  for (int k = 0; k < 200; ++k) {
    double v = map_norm2(f, sphere_point(rng, 2, 1.0 / 9));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo > 1e-4);
}

TEST_CASE("embedding dimension and span") {
  CHECK(embedding_dimension(cubic6()) == 6);
  CHECK(embedding_dimension(affine_embedding(2, 3, make_rational(1, 4), make_rational(1, 2))) == 2);
  CHECK(embedding_dimension(homogeneous_map(2, 2)) == 3);
  CHECK(linear_span_dimension(affine_embedding(2, 3, make_rational(1, 4), make_rational(1, 2))) == 3);
  CHECK(degree(cubic6()) == 3);
  CHECK(degree(affine_embedding(2, 3, make_rational(1, 4), make_rational(1, 2))) == 1);
  CHECK(degree(homogeneous_map(3, 4)) == 4);
}

TEST_CASE("k_f examples") {
  RationalMap whitney = parse_map(fixture("whitney.map"));
  for (std::uint64_t seed : {0ULL, 7ULL, 1234567ULL}) {
    CHECK(hyperplane_rank(homogeneous_map(2, 2), 8, seed) == 2);
    CHECK(hyperplane_rank(cubic6(), 8, seed) == 3);
    CHECK(hyperplane_rank(whitney, 8, seed) == 2);
  }
  CHECK(hyperplane_rank_exact(homogeneous_map(2, 2)) == 2);
  CHECK(hyperplane_rank_exact(cubic6()) == 3);
  CHECK(hyperplane_rank_exact(whitney) == 2);
  CHECK(hyperplane_rank(cubic6(), 8, 3, 4) == hyperplane_rank(cubic6(), 8, 3, 1));
}

TEST_CASE("k_f on specific hyperplanes") {
  RationalMap h2 = homogeneous_map(2, 2);
  std::vector<std::vector<RadicalScalar>> dirs{{0}, {1}};
  CHECK(hyperplane_rank_on(h2, std::vector<RadicalScalar>{1, 0}, dirs) == 2);
  CHECK(hyperplane_rank_on(h2, std::vector<RadicalScalar>{0, 0}, dirs) == 1);
  std::mt19937_64 rng(52);
  RationalMap f = cubic6();
  std::size_t kf = hyperplane_rank(f, 8, 0);
  for (int k = 0; k < 20; ++k) {
    std::vector<RadicalScalar> base{rnd_rational(rng), rnd_rational(rng)};
    std::vector<std::vector<RadicalScalar>> v{{rnd_rational(rng, 9, true)}, {rnd_rational(rng, 9, true)}};
    REQUIRE(hyperplane_rank_on(f, base, v) <= kf);
  }
}

TEST_CASE("k_f is invariant under source and target unitaries") {
  std::mt19937_64 rng(53);
  RationalMap f = cubic6();
  UnitaryMatrix rot = direct_sum(UnitaryMatrix::rotation(2, 0, 1, make_rational(3, 5), make_rational(4, 5)),
                                 UnitaryMatrix::identity(4));
  CHECK(hyperplane_rank(apply_target_unitary(rot, f), 8, 0) == 3);
  for (int k = 0; k < 5; ++k) {
    RationalMap g = apply_source_unitary(apply_target_unitary(random_unitary(6, rng), f), random_unitary(2, rng));
    REQUIRE(hyperplane_rank(g, 8, k) == 3);
    REQUIRE(embedding_dimension(g) == 6);
  }
}

TEST_CASE("k_f <= N_f - 1 for sphere maps") {
  std::mt19937_64 rng(54);
  std::vector<RationalMap> maps{cubic6(), parse_map(fixture("whitney.map")), homogeneous_map(2, 3),
                                homogeneous_map(3, 2),
                                juxtapose(homogeneous_map(2, 1), homogeneous_map(2, 3), make_rational(2, 7)),
                                affine_embedding(3, 5, make_rational(1, 9), make_rational(1, 4))};
  for (const auto& f : maps) {
    REQUIRE(maps_sphere_to_sphere(f, 1, 1));
    REQUIRE(hyperplane_rank(f, 8, rng()) + 1 <= embedding_dimension(f));
  }
}

TEST_CASE("invalid maps are rejected") {
  CHECK_THROWS_AS(RationalMap({Poly::variable(2, 0)}, Poly(2)), Error);
  CHECK_THROWS_AS(RationalMap({Poly::variable(2, 0)}, Poly::constant(3, 1)), Error);
}
