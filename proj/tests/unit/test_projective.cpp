#include "doctest.h"
#include "support.hpp"

#include "annulus/constructions.hpp"
#include "annulus/error.hpp"
#include "annulus/io.hpp"
#include "annulus/projective.hpp"

using namespace annulus;
using namespace testing;

namespace {

Matrix diag(std::initializer_list<Rational> d) {
  std::vector<RadicalScalar> v;
  for (const auto& x : d) v.emplace_back(x);
  return Matrix::diagonal(v);
}

Matrix diag_head(const Rational& head, std::size_t size) {
  std::vector<RadicalScalar> v(size, RadicalScalar(1));
  v[0] = head;
  return Matrix::diagonal(v);
}

Rational pw(const Rational& s, unsigned d) {
  Rational r = 1;
  for (unsigned k = 0; k < d; ++k) r *= s;
  return r;
}

}  // namespace

TEST_CASE("homogenize and dehomogenize") {
  RationalMap h2 = homogeneous_map(2, 2);
  HomogeneousMap F = homogenize(h2);
  REQUIRE(F.F.size() == 4);
  CHECK(F.degree == 2);
  Poly w0 = Poly::variable(3, 0), w1 = Poly::variable(3, 1), w2 = Poly::variable(3, 2);
  CHECK(F.F[0] == w0 * w0);
  CHECK(F.F[1] == w1 * w1);
  CHECK(F.F[2] == RadicalScalar::radical(2) * w1 * w2);
  CHECK(F.F[3] == w2 * w2);
  CHECK(dehomogenize(F) == h2);

  RationalMap a = affine_embedding(2, 3, make_rational(1, 4), make_rational(1, 2));
  HomogeneousMap G = homogenize(a);
  CHECK(G.F.size() == 4);
  for (const auto& p : G.F) CHECK((p.is_zero() || (p.is_homogeneous() && p.degree() == 1)));
  CHECK(dehomogenize(G) == a);

  RationalMap f = parse_map(fixture("cubic6.map"));
  CHECK(dehomogenize(homogenize(f)) == f);
}

TEST_CASE("zero-centred sphere matrices") {
  CHECK(zero_centered_sphere(2, 1).matrix() == diag({-1, 1, 1}));
  CHECK(zero_centered_sphere(2, make_rational(1, 4)).matrix() == diag({make_rational(-1, 4), 1, 1}));
  CHECK_THROWS_AS(HermitianSphereMatrix(diag({1, 1, 1})), Error);
  CHECK_THROWS_AS(HermitianSphereMatrix(diag({-1, -1, 1})), Error);
  CHECK_THROWS_AS(zero_centered_sphere(2, 0), Error);
}

TEST_CASE("Segre inclusion") {
  HomogeneousMap F = homogenize(homogeneous_map(2, 2));
  auto g = verify_segre_inclusion(F, zero_centered_sphere(2, 1), zero_centered_sphere(3, 1));
  REQUIRE(g);
  // <z,w>^2 - (z0 w0)^2 = (<z,w> - z0 w0)(<z,w> + z0 w0): quotient is <z,w>_+ = z0 w0 + z1 w1 + z2 w2
  HermitianForm plus(3);
  for (std::size_t k = 0; k < 3; ++k) plus += HermitianForm::product(Poly::variable(3, k), Poly::variable(3, k));
  CHECK(*g == plus);

  RationalMap bad = RationalMap::polynomial({Poly::variable(2, 0), Poly::variable(2, 1).pow(2)});
  CHECK(!verify_segre_inclusion(homogenize(bad), zero_centered_sphere(2, 1), zero_centered_sphere(2, 1)));

  HomogeneousMap G = homogenize(parse_map(fixture("cubic6.map")));
  CHECK(verify_segre_inclusion(G, zero_centered_sphere(2, 1), zero_centered_sphere(6, 1)));
  CHECK(verify_segre_inclusion(G, zero_centered_sphere(2, make_rational(1, 4)),
                               zero_centered_sphere(6, make_rational(1, 16))));
}

TEST_CASE("induced automorphisms of H2 between (1/4, 1/16)") {
  HomogeneousMap F = homogenize(homogeneous_map(2, 2));
  InducedPair p = induced_automorphisms(F, zero_centered_sphere(2, make_rational(1, 4)),
                                        zero_centered_sphere(3, make_rational(1, 16)));
  CHECK(p.S == diag({make_rational(1, 4), 1, 1}));
  CHECK(p.T == diag({make_rational(1, 16), 1, 1, 1}));
  CHECK(p.lambda == RadicalScalar(1));
}

TEST_CASE("induced automorphisms of H_d satisfy F(S w) = lambda T F(w)") {
  std::mt19937_64 rng(71);
  for (unsigned d = 2; d <= 3; ++d)
    for (int k = 0; k < 4; ++k) {
      Rational s = make_rational(1 + static_cast<long>(rng() % 8), 9);
      HomogeneousMap F = homogenize(homogeneous_map(2, d));
      std::size_t N = F.target_dim();
      InducedPair p = induced_automorphisms(F, zero_centered_sphere(2, s), zero_centered_sphere(N, pw(s, d)));
      REQUIRE(p.S == diag_head(s, 3));
      REQUIRE(p.T == diag_head(pw(s, d), N + 1));
      REQUIRE(p.lambda == RadicalScalar(1));
      // independent expansion: substitute w0 -> s w0
      std::vector<Poly> sw{Poly::variable(3, 0, s), Poly::variable(3, 1), Poly::variable(3, 2)};
      for (std::size_t j = 0; j <= N; ++j) {
        Poly rhs = F.F[j];
        if (j == 0) rhs = RadicalScalar(pw(s, d)) * rhs;
        REQUIRE(F.F[j].substitute(sw) == rhs);
      }
    }
}

TEST_CASE("induced automorphisms need k_f = N - 1") {
  RationalMap f = parse_map(fixture("cubic6.map"));
  HomogeneousMap F = homogenize(f);
  try {
    induced_automorphisms(F, zero_centered_sphere(2, make_rational(1, 4)), zero_centered_sphere(6, make_rational(1, 16)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
  // not a sphere pair at all
  CHECK_THROWS_AS(induced_automorphisms(homogenize(homogeneous_map(2, 2)), zero_centered_sphere(2, make_rational(1, 4)),
                                        zero_centered_sphere(3, make_rational(1, 8))),
                  Error);
}

TEST_CASE("sphere orbits") {
  auto o = sphere_orbit(homogeneous_map(2, 2), make_rational(1, 4), make_rational(1, 16), 2);
  REQUIRE(o.size() == 2);
  CHECK(o[0] == std::pair<Rational, Rational>{make_rational(1, 4), make_rational(1, 16)});
  CHECK(o[1] == std::pair<Rational, Rational>{make_rational(1, 16), make_rational(1, 256)});

  Rational s = make_rational(2, 5);
  auto id = sphere_orbit(homogeneous_map(3, 1), s, s, 4);
  for (unsigned j = 0; j < 4; ++j) CHECK(id[j].first == id[j].second);

  for (unsigned d = 2; d <= 3; ++d) {
    auto orb = sphere_orbit(homogeneous_map(2, d), make_rational(1, 3), pw(make_rational(1, 3), d), 4);
    REQUIRE(orb.size() == 4);
    for (unsigned j = 1; j <= 4; ++j) {
      CHECK(orb[j - 1].first == pw(make_rational(1, 3), j));
      CHECK(orb[j - 1].second == pw(make_rational(1, 3), j * d));
      CHECK(maps_sphere_to_sphere(homogeneous_map(2, d), orb[j - 1].first, orb[j - 1].second));
    }
  }

  CHECK_THROWS_AS(sphere_orbit(homogeneous_map(2, 2), 1, 1, 2), Error);
  CHECK_THROWS_AS(sphere_orbit(homogeneous_map(2, 2), make_rational(1, 4), make_rational(1, 8), 2), Error);
}
