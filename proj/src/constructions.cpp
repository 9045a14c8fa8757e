#include "annulus/constructions.hpp"

#include <array>

#include "annulus/error.hpp"

namespace annulus {

UnitaryMatrix::UnitaryMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) fail(ErrorKind::InvalidArgument, "unitary matrix must be square");
  if (!(m_.adjoint() * m_ == Matrix::identity(m_.rows())))
    fail(ErrorKind::InvalidArgument, "matrix is not unitary: U* U != I");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t n) { return UnitaryMatrix(Matrix::identity(n), Unchecked{}); }

UnitaryMatrix UnitaryMatrix::permutation(const std::vector<std::size_t>& perm) {
  Matrix m(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size()) fail(ErrorKind::InvalidArgument, "permutation index out of range");
    m.at(k, perm[k]) = RadicalScalar(1);
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& a,
                                      const Rational& b) {
  if (i >= n || j >= n || i == j) fail(ErrorKind::InvalidArgument, "rotation indices out of range");
  Matrix m = Matrix::identity(n);
  m.at(i, i) = RadicalScalar(a);
  m.at(i, j) = RadicalScalar(Rational(-b));
  m.at(j, i) = RadicalScalar(b);
  m.at(j, j) = RadicalScalar(a);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::phase(std::size_t n, std::size_t i, const GaussRational& unit) {
  if (i >= n) fail(ErrorKind::InvalidArgument, "phase index out of range");
  Matrix m = Matrix::identity(n);
  m.at(i, i) = RadicalScalar(unit);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidArgument, "unitary size mismatch");
  return UnitaryMatrix(a.m_ * b.m_, UnitaryMatrix::Unchecked{});
}

UnitaryMatrix direct_sum(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  std::size_t n = a.size() + b.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) m.at(r, c) = a.m_.at(r, c);
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) m.at(a.size() + r, a.size() + c) = b.m_.at(r, c);
  return UnitaryMatrix(std::move(m), UnitaryMatrix::Unchecked{});
}

UnitaryMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  static const std::array<std::pair<long, long>, 3> triples{{{3, 4}, {5, 12}, {8, 15}}};
  static const std::array<long, 3> hyp{5, 13, 17};
  UnitaryMatrix u = UnitaryMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (std::size_t step = 0; step < 2 * n + 1; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0: {
        std::vector<std::size_t> perm(n);
        for (std::size_t k = 0; k < n; ++k) perm[k] = k;
        std::swap(perm[i], perm[j]);
        u = UnitaryMatrix::permutation(perm) * u;
        break;
      }
      case 1: {
        GaussRational unit = rng() % 2 ? GaussRational(Rational(0), Rational(1)) : GaussRational(Rational(-1));
        u = UnitaryMatrix::phase(n, i, unit) * u;
        break;
      }
      default: {
        if (i == j) break;
        std::size_t t = rng() % triples.size();
        Rational a = make_rational(triples[t].first, hyp[t]);
        Rational b = make_rational(triples[t].second, hyp[t]);
        u = UnitaryMatrix::rotation(n, i, j, a, b) * u;
      }
    }
  }
  return u;
}

RationalMap homogeneous_map(std::size_t n, unsigned d) {
  if (n == 0 || d == 0) fail(ErrorKind::InvalidArgument, "homogeneous_map needs n >= 1 and d >= 1");
  auto factorial = [](unsigned k) {
    Integer r = 1;
    for (unsigned j = 2; j <= k; ++j) r *= j;
    return r;
  };
  std::vector<Poly> comps;
  for (const Monomial& a : monomials_of_degree(n, d)) {
    Integer denom = 1;
    for (auto e : a) denom *= factorial(e);
    Rational multinomial = make_rational(factorial(d), denom);
    comps.push_back(Poly::monomial(a, sqrt_of_positive_rational(multinomial)));
  }
  return RationalMap::polynomial(std::move(comps));
}

RationalMap juxtapose(const RationalMap& f, const RationalMap& g, const Rational& t) {
  if (f.source_dim() != g.source_dim()) fail(ErrorKind::InvalidArgument, "juxtapose: mismatched source dimensions");
  if (sgn(t) <= 0 || t >= 1) fail(ErrorKind::InvalidArgument, "juxtapose: weight must lie in (0, 1)");
  if (f.denominator() != g.denominator()) fail(ErrorKind::InvalidArgument, "juxtapose: differing denominators");
  RadicalScalar wf = sqrt_of_positive_rational(1 - t), wg = sqrt_of_positive_rational(t);
  std::vector<Poly> comps;
  for (const auto& p : f.components()) comps.push_back(wf * p);
  for (const auto& p : g.components()) comps.push_back(wg * p);
  return RationalMap(std::move(comps), f.denominator());
}

RationalMap affine_embedding(std::size_t n, std::size_t N, const Rational& s, const Rational& t) {
  if (n == 0 || N <= n) fail(ErrorKind::InvalidArgument, "affine_embedding needs 1 <= n < N");
  if (sgn(s) <= 0 || t >= 1) fail(ErrorKind::InvalidArgument, "affine_embedding needs 0 < s <= t < 1");
  if (t < s) fail(ErrorKind::InvalidArgument, "affine_embedding: t < s, no degree-1 map exists");
  RadicalScalar lin = sqrt_of_positive_rational((1 - t) / (1 - s));
  std::vector<Poly> comps;
  for (std::size_t k = 0; k < n; ++k) comps.push_back(Poly::variable(n, k, lin));
  if (t == s)
    comps.emplace_back(n);
  else
    comps.push_back(Poly::constant(n, sqrt_of_positive_rational((t - s) / (1 - s))));
  while (comps.size() < N) comps.emplace_back(n);
  return RationalMap::polynomial(std::move(comps));
}

RationalMap pad_and_shift(const RationalMap& f, std::size_t N, const Rational& c) {
  if (sgn(c) < 0 || c >= 1) fail(ErrorKind::InvalidArgument, "pad_and_shift needs 0 <= c < 1");
  std::size_t need = f.target_dim() + (sgn(c) > 0 ? 1 : 0);
  if (N < need) fail(ErrorKind::InvalidArgument, "pad_and_shift: target dimension too small");
  const std::size_t n = f.source_dim();
  std::vector<Poly> comps;
  if (sgn(c) == 0) {
    comps = f.components();
  } else {
    RadicalScalar w = sqrt_of_positive_rational(1 - c * c);
    for (const auto& p : f.components()) comps.push_back(w * p);
    comps.push_back(RadicalScalar(c) * f.denominator());
  }
  while (comps.size() < N) comps.emplace_back(n);
  return RationalMap(std::move(comps), f.denominator());
}

RationalMap apply_target_unitary(const UnitaryMatrix& u, const RationalMap& f) {
  if (u.size() != f.target_dim()) fail(ErrorKind::InvalidArgument, "unitary size does not match target dimension");
  std::vector<Poly> comps;
  for (std::size_t r = 0; r < u.size(); ++r) {
    Poly p(f.source_dim());
    for (std::size_t c = 0; c < u.size(); ++c)
      if (!u.matrix().at(r, c).is_zero()) p += u.matrix().at(r, c) * f.components()[c];
    comps.push_back(std::move(p));
  }
  return RationalMap(std::move(comps), f.denominator());
}

RationalMap apply_source_unitary(const RationalMap& f, const UnitaryMatrix& v) {
  const std::size_t n = f.source_dim();
  if (v.size() != n) fail(ErrorKind::InvalidArgument, "unitary size does not match source dimension");
  std::vector<Poly> images;
  for (std::size_t r = 0; r < n; ++r) {
    Poly p(n);
    for (std::size_t c = 0; c < n; ++c)
      if (!v.matrix().at(r, c).is_zero()) p += Poly::variable(n, c, v.matrix().at(r, c));
    images.push_back(std::move(p));
  }
  std::vector<Poly> comps;
  for (const auto& p : f.components()) comps.push_back(p.substitute(images));
  return RationalMap(std::move(comps), f.denominator().substitute(images));
}

}  // namespace annulus
