#include "annulus/classify.hpp"

#include <map>

#include "annulus/error.hpp"

namespace annulus {

namespace {

HermitianForm norm_z(std::size_t n) { return HermitianForm::sphere(n, RadicalScalar(0)); }

HermitianForm norm_p(const RationalMap& f) {
  return f.components().empty() ? HermitianForm(f.source_dim()) : squared_norm(f.components());
}

HermitianForm norm_q(const RationalMap& f) { return HermitianForm::product(f.denominator(), f.denominator()); }

// ||p||^2 == (lambda ||z||^2 + mu) |q|^2 with lambda = (1-t)/(1-s), mu = (t-s)/(1-s)
bool degree_one_identity(const RationalMap& f, const Rational& s, const Rational& t) {
  Rational lambda = (1 - t) / (1 - s), mu = (t - s) / (1 - s);
  HermitianForm rhs = RadicalScalar(lambda) * norm_z(f.source_dim()) +
                      HermitianForm::constant(f.source_dim(), RadicalScalar(mu));
  return norm_p(f) == rhs * norm_q(f);
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

HermitianForm hermitian_part(const HermitianForm& h) {
  HermitianForm out(h.num_vars());
  Poly sym(2 * h.num_vars());
  for (const auto& [m, c] : h.poly().terms()) {
    auto [a, b] = h.split(m);
    sym.add_term(m, c * RadicalScalar(Rational(1, 2)));
    sym.add_term(h.join(b, a), c.conj() * RadicalScalar(Rational(1, 2)));
  }
  return HermitianForm::from_poly(h.num_vars(), std::move(sym));
}

}  // namespace

GapCertificate gap_certificate(const RationalMap& f, const Rational& s) {
  if (sgn(s) <= 0 || s >= 1) fail(ErrorKind::InvalidArgument, "gap certificate needs 0 < s < 1");
  const std::size_t n = f.source_dim();
  int dp = 0;
  for (const auto& p : f.components()) dp = std::max(dp, p.degree());
  int e = std::max(dp, f.denominator().degree() + 1) - 2;

  HermitianForm one = HermitianForm::sphere(n, RadicalScalar(1));
  HermitianForm inner = HermitianForm::sphere(n, RadicalScalar(s));
  HermitianForm both = one * inner;
  HermitianForm q2 = norm_q(f);

  std::vector<Monomial> basis;
  for (int k = 0; k <= e; ++k)
    for (auto& m : monomials_of_degree(n, static_cast<unsigned>(k))) basis.push_back(m);

  // unknown columns: Q2 coefficients first, b0 and b1 last
  std::vector<HermitianForm> columns;
  std::vector<std::pair<std::size_t, std::size_t>> q2_index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Monomial m = basis[i];
      m.insert(m.end(), basis[j].begin(), basis[j].end());
      columns.push_back(HermitianForm::from_poly(n, both.poly().shifted(m)));
      q2_index.emplace_back(i, j);
    }
  columns.push_back(q2);
  columns.push_back(one * q2);

  HermitianForm target = norm_p(f);
  std::map<Monomial, std::size_t, GrlexLess> rows;
  for (const auto& [m, c] : target.poly().terms()) rows.emplace(m, 0);
  for (const auto& col : columns)
    for (const auto& [m, c] : col.poly().terms()) rows.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;

  Matrix a(rows.size(), columns.size());
  std::vector<RadicalScalar> rhs(rows.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [m, v] : columns[c].poly().terms()) a.at(rows[m], c) = v;
  for (const auto& [m, v] : target.poly().terms()) rhs[rows[m]] = v;

  auto x = solve_linear(std::move(a), std::move(rhs));
  if (!x) fail(ErrorKind::NotCertified, "gap decomposition has no solution at s = " + to_short_string(s));

  GapCertificate cert{s, (*x)[columns.size() - 2].real_part(), (*x)[columns.size() - 1].real_part(), HermitianForm(n)};
  Poly q(2 * n);
  for (std::size_t k = 0; k < q2_index.size(); ++k) {
    if ((*x)[k].is_zero()) continue;
    Monomial m = basis[q2_index[k].first];
    m.insert(m.end(), basis[q2_index[k].second].begin(), basis[q2_index[k].second].end());
    q.add_term(m, (*x)[k]);
  }
  // the identity is real, so the Hermitian part of any solution is again a solution
  cert.q2 = hermitian_part(HermitianForm::from_poly(n, std::move(q)));
  if (!check_gap_certificate(f, cert))
    fail(ErrorKind::Contradiction, "gap decomposition fails re-expansion after symmetrization");
  return cert;
}

bool check_gap_certificate(const RationalMap& f, const GapCertificate& cert) {
  const std::size_t n = f.source_dim();
  HermitianForm one = HermitianForm::sphere(n, RadicalScalar(1));
  HermitianForm inner = HermitianForm::sphere(n, RadicalScalar(cert.s));
  HermitianForm rhs = (HermitianForm::constant(n, cert.b0) + cert.b1 * one) * norm_q(f) + cert.q2 * one * inner;
  return norm_p(f) == rhs;
}

std::optional<unsigned> is_homogeneous_equivalent(const RationalMap& f) {
  if (!f.denominator().is_constant()) return std::nullopt;
  unsigned d = degree(f);
  if (d == 0) return std::nullopt;
  const std::size_t n = f.source_dim();
  HermitianForm power = norm_q(f);
  HermitianForm z2 = norm_z(n);
  for (unsigned k = 0; k < d; ++k) power = power * z2;
  if (norm_p(f) != power) return std::nullopt;
  return d;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::UnitaryIdentity: return "UnitaryIdentity";
    case Verdict::AffineEmbedding: return "AffineEmbedding";
    case Verdict::Homogeneous: return "Homogeneous";
    case Verdict::JuxtapositionLike: return "Juxtaposition-like";
    case Verdict::Unclassified: return "Unclassified";
  }
  return "?";
}

namespace {

SpherePairCertificate certify(const RationalMap& f, const Rational& s, const Rational& t) {
  auto cert = maps_sphere_to_sphere(f, s, t);
  if (!cert)
    fail(ErrorKind::NotCertified, "not proper for the sphere pair (" + to_short_string(s) + ", " +
                                      to_short_string(t) + "): remainder is nonzero");
  return std::move(*cert);
}

}  // namespace

ClassificationReport classify_annulus_map(const RationalMap& f, const Rational& s, const Rational& t,
                                          const HyperplaneRankOptions& options) {
  if (sgn(s) <= 0 || s >= 1 || sgn(t) <= 0 || t >= 1)
    fail(ErrorKind::InvalidArgument, "classification needs inner radii 0 < s, t < 1");
  ClassificationReport rep;
  rep.s = s;
  rep.t = t;
  rep.outer = certify(f, 1, 1);
  rep.inner = certify(f, s, t);

  const std::size_t n = f.source_dim();
  rep.source_dim = n;
  rep.target_dim = f.target_dim();
  rep.degree = degree(f);
  rep.embedding_dim = embedding_dimension(f);
  rep.linear_span_dim = linear_span_dimension(f);
  rep.k_f = hyperplane_rank(f, options);
  try {
    rep.spectrum = invariant_spheres(f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Precondition) throw;
    rep.notes.push_back(std::string("spectrum not computed: ") + e.what());
  }
  try {
    rep.gap = gap_certificate(f, s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCertified) throw;
    rep.notes.push_back("no gap decomposition within the bidegree bound");
  }
  if (rep.gap && rep.gap->q2.is_zero() && rep.degree > 1)
    fail(ErrorKind::Contradiction, "Q2 vanishes but the degree is " + std::to_string(rep.degree));

  const unsigned d = rep.degree;
  if (d >= 1 && Rational(binomial(static_cast<unsigned>(n + d - 1), d)) > Rational(static_cast<long>(rep.embedding_dim)))
    rep.notes.push_back("degree conjecture violated: N_f = " + std::to_string(rep.embedding_dim) + " < C(n+d-1, d)");
  if (n >= 2 && d > 1 && rep.embedding_dim > n &&
      Rational(static_cast<long>(rep.embedding_dim)) < Rational(binomial(static_cast<unsigned>(n + 1), 2)))
    fail(ErrorKind::Contradiction, "proper map of degree " + std::to_string(d) + " with n < N_f < C(n+1, 2)");

  rep.homogeneous_degree = is_homogeneous_equivalent(f);
  const bool kf_full = rep.k_f + 1 == rep.linear_span_dim;

  if (d == 1) {
    if (!degree_one_identity(f, s, t))
      fail(ErrorKind::Contradiction, "degree-1 proper map fails the affine norm identity");
    if (rep.linear_span_dim == n) {
      if (s != t) fail(ErrorKind::Contradiction, "equidimensional degree-1 map with s != t");
      rep.verdict = Verdict::UnitaryIdentity;
    } else {
      if (t < s) fail(ErrorKind::Contradiction, "affine embedding with t < s");
      rep.verdict = Verdict::AffineEmbedding;
      rep.c_squared = (t - s) / (1 - s);
      rep.c = sgn(*rep.c_squared) > 0 ? sqrt_of_positive_rational(*rep.c_squared) : RadicalScalar();
    }
    return rep;
  }

  if (kf_full != rep.homogeneous_degree.has_value())
    fail(ErrorKind::Contradiction, "k_f = " + std::to_string(rep.k_f) + " with linear span " +
                                       std::to_string(rep.linear_span_dim) + " disagrees with the norm test");
  if (kf_full) {
    Rational sd = 1;
    for (unsigned k = 0; k < d; ++k) sd *= s;
    if (*rep.homogeneous_degree != d || t != sd)
      fail(ErrorKind::Contradiction, "homogeneous map with t != s^d");
    rep.verdict = Verdict::Homogeneous;
    return rep;
  }
  if (rep.spectrum && rep.spectrum->continuum && rep.k_f + 2 <= rep.linear_span_dim) {
    rep.verdict = Verdict::JuxtapositionLike;
    return rep;
  }
  rep.verdict = Verdict::Unclassified;
  rep.ruled_out.push_back("degree " + std::to_string(d) + " > 1: not unitary or affine");
  rep.ruled_out.push_back("k_f = " + std::to_string(rep.k_f) + " < " + std::to_string(rep.linear_span_dim) +
                          " - 1: not homogeneous");
  rep.ruled_out.push_back(rep.spectrum ? "no continuum of invariant spheres: not juxtaposition-like"
                                       : "spectrum unavailable: juxtaposition-like not decided");
  return rep;
}

Classification23 classify_2_3(const RationalMap& f, const Rational& s, const Rational& t) {
  if (f.source_dim() != 2 || f.target_dim() != 3) fail(ErrorKind::InvalidArgument, "classify_2_3 needs n = 2, N = 3");
  if (sgn(s) <= 0 || s >= 1 || sgn(t) <= 0 || t >= 1)
    fail(ErrorKind::InvalidArgument, "classification needs inner radii 0 < s, t < 1");
  certify(f, 1, 1);
  certify(f, s, t);
  Classification23 out{Class23::AffineEmbedding, degree(f), false, false};
  out.affine_test = out.degree == 1 && t >= s && degree_one_identity(f, s, t);
  auto hd = is_homogeneous_equivalent(f);
  out.homogeneous_test = hd && *hd == 2 && t == s * s;
  if (out.affine_test && out.homogeneous_test)
    fail(ErrorKind::Contradiction, "theorem falsified: map is equivalent to both an affine embedding and H2");
  if (!out.affine_test && !out.homogeneous_test)
    fail(ErrorKind::Contradiction, "theorem falsified: proper map from A(2) to A(3) matches neither class");
  out.cls = out.affine_test ? Class23::AffineEmbedding : Class23::Homogeneous;
  return out;
}

}  // namespace annulus
