#include "annulus/rational_map.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "annulus/error.hpp"

namespace annulus {

RationalMap::RationalMap(std::vector<Poly> components, Poly denominator)
    : components_(std::move(components)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) fail(ErrorKind::InvalidArgument, "denominator is identically zero");
  if (denominator_.num_vars() == 0) fail(ErrorKind::InvalidArgument, "source dimension must be positive");
  for (const auto& p : components_)
    if (p.num_vars() != denominator_.num_vars())
      fail(ErrorKind::InvalidArgument, "components and denominator use different variable counts");
}

RationalMap RationalMap::polynomial(std::vector<Poly> components) {
  if (components.empty()) fail(ErrorKind::InvalidArgument, "a map needs at least one component");
  std::size_t n = components[0].num_vars();
  return RationalMap(std::move(components), Poly::constant(n, RadicalScalar(1)));
}

std::vector<Poly> RationalMap::homogeneous_vector() const {
  std::vector<Poly> v;
  v.reserve(components_.size() + 1);
  v.push_back(denominator_);
  v.insert(v.end(), components_.begin(), components_.end());
  return v;
}

unsigned degree(const RationalMap& f) {
  int d = std::max(0, f.denominator().degree());
  for (const auto& p : f.components()) d = std::max(d, p.degree());
  return static_cast<unsigned>(d);
}

HermitianForm sphere_defect(const RationalMap& f, const Rational& t) {
  HermitianForm h = f.components().empty() ? HermitianForm(f.source_dim()) : squared_norm(f.components());
  h -= RadicalScalar(t) * HermitianForm::product(f.denominator(), f.denominator());
  return h;
}

std::optional<SpherePairCertificate> maps_sphere_to_sphere(const RationalMap& f, const Rational& s,
                                                           const Rational& t) {
  if (sgn(s) <= 0 || sgn(t) <= 0) fail(ErrorKind::InvalidArgument, "sphere radii must be positive");
  const std::size_t n = f.source_dim();
  HermitianForm sphere = HermitianForm::sphere(n, RadicalScalar(s));
  if (divide_by(HermitianForm::product(f.denominator(), f.denominator()), sphere).remainder.is_zero())
    fail(ErrorKind::InvalidArgument, "denominator vanishes identically on the sphere of squared radius " +
                                         to_short_string(s));
  FormDivision d = divide_by(sphere_defect(f, t), sphere);
  if (!d.remainder.is_zero()) return std::nullopt;
  return SpherePairCertificate{s, t, std::move(d.quotient)};
}

namespace {

// Remainder of h modulo ||z||^2 - s with s a formal variable, as
// (a, b, real/imag) -> polynomial in s.
using ParamRemainder = std::map<std::tuple<Monomial, Monomial, int>, UPoly>;

ParamRemainder remainder_mod_formal_sphere(const HermitianForm& h) {
  const std::size_t n = h.num_vars();
  const std::size_t vars = 2 * n + 1;  // z, zbar, s
  Poly lifted = h.poly().embed(vars, 0);
  Poly divisor = Poly::variable(vars, 2 * n, RadicalScalar(-1));
  for (std::size_t k = 0; k < n; ++k) {
    Monomial m(vars, 0);
    m[k] = 1;
    m[k + n] = 1;
    divisor.add_term(m, RadicalScalar(1));
  }
  Poly rem = lifted.divide(divisor).remainder;
  std::map<std::tuple<Monomial, Monomial, int>, std::vector<Rational>> acc;
  for (const auto& [m, c] : rem.terms()) {
    if (!c.is_gauss_rational())
      fail(ErrorKind::Precondition,
           "invariant_spheres needs Gaussian-rational Hermitian products; found coefficient " + c.to_string());
    GaussRational g = c.gauss_value();
    Monomial a(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n));
    Monomial b(m.begin() + static_cast<std::ptrdiff_t>(n), m.begin() + static_cast<std::ptrdiff_t>(2 * n));
    std::uint32_t e = m[2 * n];
    for (int part = 0; part < 2; ++part) {
      const Rational& v = part == 0 ? g.re : g.im;
      if (sgn(v) == 0) continue;
      auto& coeffs = acc[{a, b, part}];
      if (coeffs.size() <= e) coeffs.resize(e + 1);
      coeffs[e] += v;
    }
  }
  ParamRemainder out;
  for (auto& [key, coeffs] : acc) {
    UPoly p(std::move(coeffs));
    if (!p.is_zero()) out.emplace(key, std::move(p));
  }
  return out;
}

struct Equation {
  UPoly c;  // from ||p||^2
  UPoly d;  // from |q|^2; the equation is c(s) = t d(s)
};

}  // namespace

SphereSpectrum invariant_spheres(const RationalMap& f) {
  const std::size_t n = f.source_dim();
  HermitianForm norm_p = f.components().empty() ? HermitianForm(n) : squared_norm(f.components());
  HermitianForm norm_q = HermitianForm::product(f.denominator(), f.denominator());
  ParamRemainder rp = remainder_mod_formal_sphere(norm_p);
  ParamRemainder rq = remainder_mod_formal_sphere(norm_q);

  std::vector<Equation> eqs;
  std::map<std::tuple<Monomial, Monomial, int>, int> keys;
  for (const auto& [k, v] : rp) keys.emplace(k, 0);
  for (const auto& [k, v] : rq) keys.emplace(k, 0);
  for (const auto& [k, unused] : keys) {
    Equation e;
    if (auto it = rp.find(k); it != rp.end()) e.c = it->second;
    if (auto it = rq.find(k); it != rq.end()) e.d = it->second;
    eqs.push_back(std::move(e));
  }

  SphereSpectrum out;
  UPoly g;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = i + 1; j < eqs.size(); ++j) {
      UPoly cross = eqs[i].c * eqs[j].d - eqs[j].c * eqs[i].d;
      if (!cross.is_zero()) g = gcd(g, cross);
    }
  out.eliminant = g;

  if (g.is_zero()) {
    auto it = std::find_if(eqs.begin(), eqs.end(), [](const Equation& e) { return !e.d.is_zero(); });
    if (it == eqs.end()) fail(ErrorKind::InvalidArgument, "denominator vanishes on every sphere");
    UPoly common = gcd(it->c, it->d);
    ContinuumBranch branch;
    if (it->c.is_zero()) {
      branch.numerator = UPoly();
      branch.denominator = UPoly::constant(Rational(1));
    } else {
      branch.numerator = it->c.divmod(common).quotient;
      branch.denominator = it->d.divmod(common).quotient;
      Rational lead = branch.denominator.leading();
      branch.numerator = (1 / lead) * branch.numerator;
      branch.denominator = (1 / lead) * branch.denominator;
    }
    // symbolic re-verification: c_k * den == num * d_k for every equation
    for (const auto& e : eqs)
      if (!(e.c * branch.denominator - branch.numerator * e.d).is_zero())
        fail(ErrorKind::Contradiction, "continuum branch fails symbolic re-verification");
    out.continuum = std::move(branch);
    return out;
  }

  if (g.degree() <= 0) return out;
  for (RealRoot& root : real_roots(g, Rational(0), Rational(1))) {
    InvariantPair pair;
    const Equation* chosen = nullptr;
    for (const auto& e : eqs) {
      if (e.d.is_zero()) continue;
      if (sign_at_root(e.d, root) != 0) {
        chosen = &e;
        break;
      }
    }
    if (!chosen) continue;  // |q|^2 vanishes on this sphere: degenerate
    int sign_t = sign_at_root(chosen->c, root) * sign_at_root(chosen->d, root);
    if (sign_t <= 0) continue;
    pair.t_numerator = chosen->c;
    pair.t_denominator = chosen->d;
    if (root.exact) {
      Rational s = *root.exact;
      Rational t = chosen->c(s) / chosen->d(s);
      pair.t = t;
      if (!maps_sphere_to_sphere(f, s, t))
        fail(ErrorKind::Contradiction, "eliminant root s = " + to_short_string(s) + " does not re-certify");
      pair.certified = true;
    }
    pair.s = std::move(root);
    out.isolated.push_back(std::move(pair));
  }
  std::sort(out.isolated.begin(), out.isolated.end(),
            [](const InvariantPair& a, const InvariantPair& b) { return a.s.hi > b.s.hi; });
  return out;
}

std::size_t embedding_dimension(const RationalMap& f) {
  std::vector<Poly> v = f.homogeneous_vector();
  return span_dimension(v) - 1;
}

std::size_t linear_span_dimension(const RationalMap& f) { return span_dimension(f.components()); }

namespace {

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

std::size_t restricted_rank(const RationalMap& f, std::span<const RadicalScalar> base,
                            const std::vector<std::vector<RadicalScalar>>& directions) {
  std::vector<Poly> restricted;
  for (const auto& p : f.homogeneous_vector()) restricted.push_back(substitute_affine(p, base, directions));
  std::size_t dim = span_dimension(restricted);
  return dim == 0 ? 0 : dim - 1;
}

std::size_t direction_rank(const std::vector<std::vector<RadicalScalar>>& directions) {
  if (directions.empty() || directions[0].empty()) return 0;
  Matrix m(directions.size(), directions[0].size());
  for (std::size_t i = 0; i < directions.size(); ++i)
    for (std::size_t j = 0; j < directions[i].size(); ++j) m.at(i, j) = directions[i][j];
  return rank(std::move(m));
}

std::size_t random_trial(const RationalMap& f, unsigned trial, std::uint64_t seed) {
  const std::size_t n = f.source_dim();
  std::mt19937_64 rng(seed + trial);
  // the coefficient bound doubles with each trial
  long bound = 4L << std::min(trial, 20u);
  while (true) {
    std::vector<RadicalScalar> base(n);
    std::vector<std::vector<RadicalScalar>> dirs(n, std::vector<RadicalScalar>(n - 1));
    for (auto& a : base) a = RadicalScalar(random_rational(rng, bound));
    for (auto& row : dirs)
      for (auto& v : row) v = RadicalScalar(random_rational(rng, bound));
    if (direction_rank(dirs) != n - 1) continue;
    return restricted_rank(f, base, dirs);
  }
}

// Rank over the fraction field of a polynomial ring (fraction-free Bareiss with full pivoting).
std::size_t rank_over_fraction_field(std::vector<std::vector<Poly>> m, std::size_t num_params) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Poly prev = Poly::constant(num_params, RadicalScalar(1));
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (!m[i][j].is_zero() && (pi == rows || m[i][j].term_count() < m[pi][pj].term_count())) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[r], m[pi]);
    for (auto& row : m) std::swap(row[r], row[pj]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        Poly num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
        Poly::Division d = num.divide(prev);
        if (!d.remainder.is_zero()) fail(ErrorKind::Contradiction, "Bareiss step left a remainder");
        m[i][j] = std::move(d.quotient);
      }
      m[i][r] = Poly(num_params);
    }
    prev = m[r][r];
  }
  return r;
}

}  // namespace

std::size_t hyperplane_rank(const RationalMap& f, unsigned trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) fail(ErrorKind::InvalidArgument, "hyperplane_rank needs at least one trial");
  threads = std::max(1u, std::min(threads, trials));
  std::vector<std::size_t> results(trials, 0);
  if (threads == 1) {
    for (unsigned k = 0; k < trials; ++k) results[k] = random_trial(f, k, seed);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (unsigned k = w; k < trials; k += threads) results[k] = random_trial(f, k, seed);
      });
    for (auto& th : pool) th.join();
  }
  return *std::max_element(results.begin(), results.end());
}

std::size_t hyperplane_rank_exact(const RationalMap& f) {
  const std::size_t n = f.source_dim();
  if (n == 1) return 0;
  // ring: z_1..z_{n-1}, then c, b_1..b_{n-1}
  const std::size_t free = n - 1;
  const std::size_t vars = free + n;
  std::vector<Poly> images;
  for (std::size_t k = 0; k < free; ++k) images.push_back(Poly::variable(vars, k));
  Poly last = Poly::variable(vars, free);
  for (std::size_t k = 0; k < free; ++k) last += Poly::variable(vars, k) * Poly::variable(vars, free + 1 + k);
  images.push_back(std::move(last));

  std::vector<std::map<Monomial, Poly, GrlexLess>> rows;
  std::map<Monomial, std::size_t, GrlexLess> columns;
  for (const auto& p : f.homogeneous_vector()) {
    Poly r = p.substitute(images);
    std::map<Monomial, Poly, GrlexLess> row;
    for (const auto& [m, c] : r.terms()) {
      Monomial zpart(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(free));
      Monomial ppart(m.begin() + static_cast<std::ptrdiff_t>(free), m.end());
      auto it = row.try_emplace(zpart, Poly(n)).first;
      it->second.add_term(ppart, c);
      columns.emplace(zpart, 0);
    }
    rows.push_back(std::move(row));
  }
  std::size_t k = 0;
  for (auto& [m, idx] : columns) idx = k++;
  std::vector<std::vector<Poly>> mat(rows.size(), std::vector<Poly>(columns.size(), Poly(n)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [m, c] : rows[i]) mat[i][columns[m]] = c;
  std::size_t rk = rank_over_fraction_field(std::move(mat), n);
  return rk == 0 ? 0 : rk - 1;
}

std::size_t hyperplane_rank(const RationalMap& f, const HyperplaneRankOptions& options) {
  if (options.exact) return hyperplane_rank_exact(f);
  return hyperplane_rank(f, options.trials, options.seed, options.threads);
}

std::size_t hyperplane_rank_on(const RationalMap& f, std::span<const RadicalScalar> base,
                               const std::vector<std::vector<RadicalScalar>>& directions) {
  const std::size_t n = f.source_dim();
  if (base.size() != n || directions.size() != n)
    fail(ErrorKind::InvalidArgument, "hyperplane must be given by n base coordinates and n direction rows");
  for (const auto& row : directions)
    if (row.size() != n - 1) fail(ErrorKind::InvalidArgument, "hyperplane directions must have n - 1 columns");
  if (direction_rank(directions) != n - 1) fail(ErrorKind::InvalidArgument, "degenerate direction matrix");
  return restricted_rank(f, base, directions);
}

}  // namespace annulus
