// Shared generators and numeric oracles for the unit suites.
#ifndef ANNULUS_TEST_SUPPORT_HPP
#define ANNULUS_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "annulus/hermitian.hpp"
#include "annulus/rational_map.hpp"

namespace testing {

using namespace annulus;
using cplx = std::complex<double>;

inline Rational rnd_rational(std::mt19937_64& rng, long bound = 9, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  while (true) {
    Rational r = make_rational(num(rng), den(rng));
    if (!nonzero || sgn(r) != 0) return r;
  }
}

inline Rational rnd_positive(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(1, bound), den(1, bound);
  return make_rational(num(rng), den(rng));
}

// Random element of Q(i)(sqrt 2, sqrt 3, sqrt 5, sqrt 6, ...) with up to `terms` radicands.
inline RadicalScalar rnd_scalar(std::mt19937_64& rng, int terms = 3, bool complex = true) {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 15};
  std::uniform_int_distribution<int> pick(0, 7), count(0, terms);
  RadicalScalar out;
  int k = count(rng);
  for (int j = 0; j < k; ++j) {
    GaussRational c(rnd_rational(rng), complex ? rnd_rational(rng) : Rational(0));
    if (c.is_zero()) continue;
    out += RadicalScalar::radical(radicands[pick(rng)], c);
  }
  return out;
}

inline Poly rnd_poly(std::mt19937_64& rng, std::size_t n, unsigned max_deg, int max_terms, bool radicals = false) {
  Poly p(n);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  std::uniform_int_distribution<int> tc(1, max_terms);
  int k = tc(rng);
  for (int j = 0; j < k; ++j) {
    Monomial m(n);
    unsigned total = 0;
    for (auto& x : m) {
      x = std::min(e(rng), max_deg - total);
      total += x;
    }
    RadicalScalar c = radicals ? rnd_scalar(rng, 2) : RadicalScalar(GaussRational(rnd_rational(rng), rnd_rational(rng)));
    p.add_term(m, c);
  }
  return p;
}

inline cplx eval(const Poly& p, const std::vector<cplx>& z) {
  cplx acc = 0;
  for (const auto& [m, c] : p.terms()) {
    cplx t = c.to_complex();
    for (std::size_t k = 0; k < m.size(); ++k) t *= std::pow(z[k], static_cast<int>(m[k]));
    acc += t;
  }
  return acc;
}

// h(z, zbar) evaluated numerically
inline cplx eval_form(const HermitianForm& h, const std::vector<cplx>& z) {
  std::vector<cplx> zz(z);
  for (auto& v : z) zz.push_back(std::conj(v));
  return eval(h.poly(), zz);
}

// A point with ||z||^2 = s.
inline std::vector<cplx> sphere_point(std::mt19937_64& rng, std::size_t n, double s) {
  std::normal_distribution<double> g;
  std::vector<cplx> z(n);
  double norm = 0;
  for (auto& v : z) {
    v = {g(rng), g(rng)};
    norm += std::norm(v);
  }
  for (auto& v : z) v *= std::sqrt(s / norm);
  return z;
}

// ||f(z)||^2 at a point
inline double map_norm2(const RationalMap& f, const std::vector<cplx>& z) {
  cplx q = eval(f.denominator(), z);
  double acc = 0;
  for (const auto& p : f.components()) acc += std::norm(eval(p, z) / q);
  return acc;
}

inline std::string fixture(const std::string& name) {
  const char* dir = std::getenv("ANNULUS_FIXTURES");
  std::string path = std::string(dir ? dir : "tests/fixtures") + "/" + name;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Integer binom(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace testing

#endif
