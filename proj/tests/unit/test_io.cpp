#include "doctest.h"
#include "support.hpp"

#include "annulus/constructions.hpp"
#include "annulus/error.hpp"
#include "annulus/io.hpp"

using namespace annulus;
using namespace testing;

namespace {

struct Located {
  std::size_t line = 0, column = 0;
  std::string message;
};

Located parse_failure(const std::string& text) {
  try {
    parse_map_document(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.what()};
  }
  FAIL("expected a parse error");
  return {};
}

const char* kFixtures[] = {"cubic6.map", "h2.map", "whitney.map", "affine.map", "juxt_h1_h2.map", "rotated_h2.map"};

}  // namespace

TEST_CASE("expression examples") {
  Poly c = parse_expression("(2/5)*sqrt(5)*z1^3", 2);
  Monomial m{3, 0};
  CHECK(c.coeff(m) == RadicalScalar::radical(5, GaussRational(make_rational(2, 5))));
  // 2/sqrt5 squared is 4/5
  CHECK(c.coeff(m) * c.coeff(m) == RadicalScalar(make_rational(4, 5)));
  CHECK(parse_expression("sqrt(2)*z1*z2", 2) == homogeneous_map(2, 2).components()[1]);
  CHECK(parse_expression("-z1 + 3*i*z2^2 - (z1 - 1)^2", 2) ==
        -Poly::variable(2, 0) + Poly::variable(2, 1, RadicalScalar(GaussRational(0, 3))).shifted({0, 1}) -
            (Poly::variable(2, 0) - Poly::constant(2, 1)).pow(2));
  CHECK(parse_expression("sqrt(8/9)", 1) == Poly::constant(1, RadicalScalar::radical(2, GaussRational(make_rational(2, 3)))));
}

TEST_CASE("expression errors carry line and column") {
  try {
    parse_expression("z1^-1", 1, 4, 11);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 14);
    CHECK(std::string(e.what()).find("exponent") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expression("z3", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("sqrt(-2)", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("z1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("(z1", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0", 2), ParseError);
}

TEST_CASE("bad fixtures") {
  Located e = parse_failure(fixture("bad_exponent.map"));
  CHECK(e.line == 3);
  CHECK(e.column == 14);
  CHECK(e.message.find("exponent") != std::string::npos);

  e = parse_failure(fixture("bad_sqrt.map"));
  CHECK(e.line == 3);
  CHECK(e.message.find("non-representable coefficient") != std::string::npos);

  e = parse_failure(fixture("bad_variable.map"));
  CHECK(e.line == 4);
  CHECK(e.column == 11);
  CHECK(e.message.find("unknown variable") != std::string::npos);

  try {
    parse_map_document(fixture("bad_pair.map"));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotCertified);
  }
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(parse_map_document("n=2\nn=2\ncomponent=z1\n"), ParseError);
  CHECK_THROWS_AS(parse_map_document("n=2\ncolor=red\ncomponent=z1\n"), ParseError);
  CHECK_THROWS_AS(parse_map_document("n=2\nN=3\ncomponent=z1\n"), ParseError);
  CHECK_THROWS_AS(parse_map_document("N=1\ncomponent=z1\n"), ParseError);
  CHECK_THROWS_AS(parse_map_document("n=2\n"), ParseError);
  CHECK_THROWS_AS(parse_map_document("n=2\ncomponent=z1\ndenominator=0\n"), ParseError);
  CHECK_THROWS_AS(parse_map_document("n=2\ncomponent=z1\nsphere_pair=1\n"), ParseError);
  Located e = parse_failure("n=2\n# fine\ncomponent=z1\ncomponent=z1 + * z2\n");
  CHECK(e.line == 4);
}

TEST_CASE("documents parse with comments, spaces and denominators") {
  MapDocument d = parse_map_document("# comment\n n = 1 \nN=1\ncomponent = z1  # trailing\ndenominator = 2\n");
  CHECK(d.map.source_dim() == 1);
  CHECK(d.map.denominator() == Poly::constant(1, 2));
  CHECK(d.sphere_pairs.empty());
  MapDocument h = parse_map_document(fixture("h2.map"));
  CHECK(h.map == homogeneous_map(2, 2));
}

TEST_CASE("serialize and parse round-trip on every fixture") {
  for (const char* name : kFixtures) {
    MapDocument d = parse_map_document(fixture(name));
    std::string text = serialize_map(d.map, d.sphere_pairs);
    MapDocument back = parse_map_document(text);
    INFO(name);
    CHECK(back.map == d.map);
    CHECK(back.sphere_pairs == d.sphere_pairs);
    CHECK(serialize_map(back.map, back.sphere_pairs) == text);
  }
}

TEST_CASE("round-trip on random maps") {
  std::mt19937_64 rng(91);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 1 + rng() % 3;
    std::vector<Poly> comps;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < count; ++j) comps.push_back(rnd_poly(rng, n, 3, 4, true));
    Poly q(n);
    while (q.is_zero()) q = rnd_poly(rng, n, 1, 2);
    RationalMap f(comps, q);
    REQUIRE(parse_map(serialize_map(f)) == f);
  }
}
