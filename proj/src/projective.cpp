#include "annulus/projective.hpp"

#include "annulus/error.hpp"

namespace annulus {

HomogeneousMap homogenize(const RationalMap& f) {
  HomogeneousMap out;
  out.degree = degree(f);
  const std::size_t n = f.source_dim();
  for (const Poly& p : f.homogeneous_vector()) {
    Poly h(n + 1);
    for (const auto& [m, c] : p.terms()) {
      Monomial hm(n + 1);
      hm[0] = out.degree - total_degree(m);
      std::copy(m.begin(), m.end(), hm.begin() + 1);
      h.add_term(hm, c);
    }
    out.F.push_back(std::move(h));
  }
  return out;
}

RationalMap dehomogenize(const HomogeneousMap& F) {
  if (F.F.empty()) fail(ErrorKind::InvalidArgument, "empty homogeneous map");
  const std::size_t n = F.source_dim();
  std::vector<Poly> images{Poly::constant(n, RadicalScalar(1))};
  for (std::size_t k = 0; k < n; ++k) images.push_back(Poly::variable(n, k));
  std::vector<Poly> comps;
  for (std::size_t k = 1; k < F.F.size(); ++k) comps.push_back(F.F[k].substitute(images));
  return RationalMap(std::move(comps), F.F[0].substitute(images));
}

HermitianSphereMatrix::HermitianSphereMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) fail(ErrorKind::InvalidArgument, "sphere matrix must be square, size >= 2");
  if (!m_.is_hermitian()) fail(ErrorKind::InvalidArgument, "sphere matrix is not Hermitian");
  Inertia in = hermitian_inertia(m_);
  if (in.positive != m_.rows() - 1 || in.negative != 1)
    fail(ErrorKind::InvalidArgument, "not an LFT sphere: signature (" + std::to_string(in.positive) + ", " +
                                         std::to_string(in.negative) + "), expected (" +
                                         std::to_string(m_.rows() - 1) + ", 1)");
}

HermitianSphereMatrix zero_centered_sphere(std::size_t m, const Rational& s) {
  if (sgn(s) <= 0) fail(ErrorKind::InvalidArgument, "sphere radius must be positive");
  std::vector<RadicalScalar> d(m + 1, RadicalScalar(1));
  d[0] = RadicalScalar(Rational(-s));
  return HermitianSphereMatrix(Matrix::diagonal(d));
}

HermitianForm polarized_pairing(const Matrix& m, const std::vector<Poly>& a) {
  if (a.size() != m.rows()) fail(ErrorKind::InvalidArgument, "pairing dimension mismatch");
  HermitianForm h(a.empty() ? 0 : a[0].num_vars());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) h += m.at(i, j) * HermitianForm::product(a[j], a[i]);
  return h;
}

namespace {
std::vector<Poly> coordinates(std::size_t k) {
  std::vector<Poly> z;
  for (std::size_t i = 0; i < k; ++i) z.push_back(Poly::variable(k, i));
  return z;
}
}  // namespace

std::optional<HermitianForm> verify_segre_inclusion(const HomogeneousMap& F, const HermitianSphereMatrix& src,
                                                    const HermitianSphereMatrix& tgt) {
  if (src.size() != F.source_dim() + 1 || tgt.size() != F.F.size())
    fail(ErrorKind::InvalidArgument, "sphere matrix dimensions do not match the map");
  HermitianForm lhs = polarized_pairing(tgt.matrix(), F.F);
  HermitianForm base = polarized_pairing(src.matrix(), coordinates(src.size()));
  FormDivision d = divide_by(lhs, base);
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotient);
}

namespace {

Matrix j_times(const Matrix& a) {
  Matrix out = a;
  for (std::size_t c = 0; c < a.cols(); ++c) out.at(0, c) = -a.at(0, c);
  return out;
}

std::vector<Poly> apply_matrix(const Matrix& m, const std::vector<Poly>& v) {
  std::vector<Poly> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Poly p(v[0].num_vars());
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) p += m.at(r, c) * v[c];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

InducedPair induced_automorphisms(const HomogeneousMap& F, const HermitianSphereMatrix& a,
                                  const HermitianSphereMatrix& b, std::optional<std::size_t> k_f,
                                  const HyperplaneRankOptions& options) {
  const std::size_t n = F.source_dim(), N = F.target_dim();
  if (a.size() != n + 1 || b.size() != N + 1) fail(ErrorKind::InvalidArgument, "sphere matrix dimensions do not match the map");
  if (!verify_segre_inclusion(F, zero_centered_sphere(n, 1), zero_centered_sphere(N, 1)))
    fail(ErrorKind::Precondition, "map does not send the unit sphere to the unit sphere");
  if (!verify_segre_inclusion(F, a, b)) fail(ErrorKind::Precondition, "map does not send the A-sphere to the B-sphere");
  std::size_t k = k_f ? *k_f : hyperplane_rank(dehomogenize(F), options);
  if (k + 1 != N)
    fail(ErrorKind::Precondition, "induced automorphisms need k_f = N - 1; k_f = " + std::to_string(k) +
                                      ", N = " + std::to_string(N));

  InducedPair out{j_times(a.matrix()), j_times(b.matrix()), RadicalScalar()};
  std::vector<Poly> lhs;
  std::vector<Poly> sw = apply_matrix(out.S, coordinates(n + 1));
  for (const Poly& p : F.F) lhs.push_back(p.substitute(sw));
  std::vector<Poly> rhs = apply_matrix(out.T, F.F);

  for (std::size_t k2 = 0; k2 < rhs.size(); ++k2) {
    if (rhs[k2].is_zero()) continue;
    RadicalScalar l = lhs[k2].coeff(rhs[k2].leading_monomial());
    out.lambda = l / rhs[k2].leading_coeff();
    break;
  }
  if (out.lambda.is_zero()) fail(ErrorKind::Contradiction, "F(S w) = lambda T F(w) has no nonzero lambda");
  for (std::size_t k2 = 0; k2 < rhs.size(); ++k2)
    if (lhs[k2] != out.lambda * rhs[k2])
      fail(ErrorKind::Contradiction, "F(S w) = lambda T F(w) fails in component " + std::to_string(k2));
  return out;
}

std::vector<std::pair<Rational, Rational>> sphere_orbit(const RationalMap& f, const Rational& s, const Rational& t,
                                                        unsigned k, const HyperplaneRankOptions& options) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "orbit length must be positive");
  if (sgn(s) <= 0 || s >= 1 || sgn(t) <= 0 || t >= 1)
    fail(ErrorKind::InvalidArgument, "orbit needs a strictly inner sphere pair, 0 < s, t < 1");
  if (!maps_sphere_to_sphere(f, 1, 1)) fail(ErrorKind::NotCertified, "map does not send the unit sphere to the unit sphere");
  if (!maps_sphere_to_sphere(f, s, t))
    fail(ErrorKind::NotCertified, "map does not send the sphere pair (" + to_short_string(s) + ", " +
                                      to_short_string(t) + ")");
  HomogeneousMap F = homogenize(f);
  induced_automorphisms(F, zero_centered_sphere(f.source_dim(), s), zero_centered_sphere(f.target_dim(), t),
                        std::nullopt, options);
  std::vector<std::pair<Rational, Rational>> out;
  Rational sj = s, tj = t;
  for (unsigned j = 1; j <= k; ++j) {
    if (!maps_sphere_to_sphere(f, sj, tj))
      fail(ErrorKind::Contradiction, "orbit pair (" + to_short_string(sj) + ", " + to_short_string(tj) +
                                         ") does not re-certify");
    out.emplace_back(sj, tj);
    sj *= s;
    tj *= t;
  }
  return out;
}

}  // namespace annulus
