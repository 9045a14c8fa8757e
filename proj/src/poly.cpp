#include "annulus/poly.hpp"

#include <algorithm>
#include <numeric>

#include "annulus/error.hpp"

namespace annulus {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial m(num_vars, 0);
  // recursive fill, largest first exponent first
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == num_vars) {
      m[pos] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Poly Poly::constant(std::size_t num_vars, const RadicalScalar& c) {
  Poly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index, const RadicalScalar& c) {
  if (index >= num_vars) fail(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return monomial(m, c);
}

Poly Poly::monomial(const Monomial& m, const RadicalScalar& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(ErrorKind::InvalidArgument, "leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const RadicalScalar& Poly::leading_coeff() const {
  if (terms_.empty()) fail(ErrorKind::InvalidArgument, "leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

RadicalScalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RadicalScalar() : it->second;
}

void Poly::add_term(const Monomial& m, const RadicalScalar& c) {
  if (m.size() != num_vars_) fail(ErrorKind::InvalidArgument, "monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void require_same_ring(const Poly& a, const Poly& b) {
  if (a.num_vars() != b.num_vars())
    fail(ErrorKind::InvalidArgument, "polynomials live in rings with different variable counts (" +
                                         std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) + ")");
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const RadicalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly r(a.num_vars_);
  Monomial m(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_; }

Poly Poly::pow(unsigned k) const {
  Poly result = constant(num_vars_, RadicalScalar(1));
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::conj_coeffs() const {
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v = v.conj();
  return r;
}

Poly Poly::shifted(const Monomial& shift) const {
  Poly r(num_vars_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += shift[k];
    r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
  }
  return r;
}

Poly::Division Poly::divide(const Poly& g) const {
  require_same_ring(*this, g);
  if (g.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const Monomial& lead = g.leading_monomial();
  RadicalScalar lead_inv;
  try {
    lead_inv = g.leading_coeff().inverse();
  } catch (const Error&) {
    fail(ErrorKind::Precondition, "leading coefficient of the divisor is not invertible");
  }
  Poly work = *this;
  Division out{Poly(num_vars_), Poly(num_vars_)};
  Monomial shift(num_vars_);
  while (!work.is_zero()) {
    auto top = std::prev(work.terms_.end());
    if (divides(lead, top->first)) {
      for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = top->first[k] - lead[k];
      RadicalScalar factor = top->second * lead_inv;
      out.quotient.add_term(shift, factor);
      Monomial m(num_vars_);
      for (const auto& [gm, gc] : g.terms_) {
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = gm[k] + shift[k];
        work.add_term(m, -(factor * gc));
      }
    } else {
      out.remainder.terms_.emplace(top->first, top->second);
      work.terms_.erase(top);
    }
  }
  return out;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != num_vars_)
    fail(ErrorKind::InvalidArgument, "substitution needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].num_vars();
  for (const auto& img : images)
    if (img.num_vars() != target) fail(ErrorKind::InvalidArgument, "substitution images live in different rings");
  // powers[k][e] = images[k]^e, filled lazily
  std::vector<std::vector<Poly>> powers(num_vars_);
  auto power = [&](std::size_t k, unsigned e) -> const Poly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Poly::constant(target, RadicalScalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (std::size_t k = 0; k < num_vars_; ++k)
      if (m[k]) term = term * power(k, m[k]);
    result += term;
  }
  return result;
}

Poly Poly::embed(std::size_t new_num_vars, std::size_t offset) const {
  if (offset + num_vars_ > new_num_vars) fail(ErrorKind::InvalidArgument, "embedding does not fit the target ring");
  Poly r(new_num_vars);
  for (const auto& [m, c] : terms_) {
    Monomial e(new_num_vars, 0);
    std::copy(m.begin(), m.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

std::string Poly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending grlex reads naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (!m[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(k + 1);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    for (const auto& [rad, g] : c.terms()) {
      for (int part = 0; part < 2; ++part) {
        const Rational& q = part == 0 ? g.re : g.im;
        if (sgn(q) == 0) continue;
        bool negative = sgn(q) < 0;
        if (out.empty())
          out += negative ? "-" : "";
        else
          out += negative ? " - " : " + ";
        Rational mag = abs(q);
        std::string body;
        bool bare = part == 0 && rad == 1 && mono.empty();
        if (mag != 1 || bare) body = to_short_string(mag);
        auto append = [&body](const std::string& f) { body += (body.empty() ? "" : "*") + f; };
        if (part == 1) append("i");
        if (rad != 1) append("sqrt(" + rad.get_str() + ")");
        if (!mono.empty()) append(mono);
        out += body;
      }
    }
  }
  return out;
}

Poly substitute_affine(const Poly& p, std::span<const RadicalScalar> base,
                       const std::vector<std::vector<RadicalScalar>>& directions) {
  if (base.size() != p.num_vars() || directions.size() != p.num_vars())
    fail(ErrorKind::InvalidArgument, "affine substitution: base and direction rows must match the variable count");
  std::size_t cols = directions.empty() ? 0 : directions[0].size();
  for (const auto& row : directions)
    if (row.size() != cols) fail(ErrorKind::InvalidArgument, "affine substitution: ragged direction matrix");
  std::vector<Poly> images;
  images.reserve(p.num_vars());
  for (std::size_t k = 0; k < p.num_vars(); ++k) {
    Poly img = Poly::constant(cols, base[k]);
    for (std::size_t j = 0; j < cols; ++j) img += Poly::variable(cols, j, directions[k][j]);
    images.push_back(std::move(img));
  }
  return p.substitute(images);
}

std::size_t count_nonzero_coeffs(const Poly& p) { return p.term_count(); }

}  // namespace annulus
