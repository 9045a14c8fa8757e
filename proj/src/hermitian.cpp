#include "annulus/hermitian.hpp"

#include <map>

#include "annulus/error.hpp"

namespace annulus {

HermitianForm HermitianForm::from_poly(std::size_t num_vars, Poly poly) {
  if (poly.num_vars() != 2 * num_vars) fail(ErrorKind::InvalidArgument, "form polynomial must have 2n variables");
  HermitianForm h(num_vars);
  h.poly_ = std::move(poly);
  return h;
}

HermitianForm HermitianForm::product(const Poly& p, const Poly& g) {
  if (p.num_vars() != g.num_vars()) fail(ErrorKind::InvalidArgument, "mismatched variable counts");
  const std::size_t n = p.num_vars();
  HermitianForm h(n);
  Monomial m(2 * n);
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      std::copy(a.begin(), a.end(), m.begin());
      std::copy(b.begin(), b.end(), m.begin() + static_cast<std::ptrdiff_t>(n));
      h.poly_.add_term(m, ca * cb.conj());
    }
  }
  return h;
}

HermitianForm HermitianForm::constant(std::size_t num_vars, const RadicalScalar& c) {
  return from_poly(num_vars, Poly::constant(2 * num_vars, c));
}

HermitianForm HermitianForm::sphere(std::size_t num_vars, const RadicalScalar& s) {
  Poly p = Poly::constant(2 * num_vars, -s);
  for (std::size_t k = 0; k < num_vars; ++k) {
    Monomial m(2 * num_vars, 0);
    m[k] = 1;
    m[k + num_vars] = 1;
    p.add_term(m, RadicalScalar(1));
  }
  return from_poly(num_vars, std::move(p));
}

std::pair<Monomial, Monomial> HermitianForm::split(const Monomial& m) const {
  auto mid = m.begin() + static_cast<std::ptrdiff_t>(num_vars_);
  return {Monomial(m.begin(), mid), Monomial(mid, m.end())};
}

Monomial HermitianForm::join(const Monomial& a, const Monomial& b) const {
  Monomial m(a);
  m.insert(m.end(), b.begin(), b.end());
  return m;
}

RadicalScalar HermitianForm::coeff(const Monomial& a, const Monomial& b) const { return poly_.coeff(join(a, b)); }

bool HermitianForm::is_hermitian() const {
  for (const auto& [m, c] : poly_.terms()) {
    auto [a, b] = split(m);
    if (poly_.coeff(join(b, a)) != c.conj()) return false;
  }
  return true;
}

std::vector<Monomial> HermitianForm::basis() const {
  std::map<Monomial, int, GrlexLess> seen;
  for (const auto& [m, c] : poly_.terms()) {
    auto [a, b] = split(m);
    seen.emplace(a, 0);
    seen.emplace(b, 0);
  }
  std::vector<Monomial> out;
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) out.push_back(it->first);
  return out;
}

Matrix HermitianForm::coefficient_matrix() const {
  std::vector<Monomial> idx = basis();
  std::map<Monomial, std::size_t> pos;
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  Matrix mat(idx.size(), idx.size());
  for (const auto& [m, c] : poly_.terms()) {
    auto [a, b] = split(m);
    mat.at(pos[a], pos[b]) = c;
  }
  return mat;
}

HermitianForm& HermitianForm::operator+=(const HermitianForm& o) {
  if (num_vars_ != o.num_vars_) fail(ErrorKind::InvalidArgument, "mismatched variable counts");
  poly_ += o.poly_;
  return *this;
}

HermitianForm& HermitianForm::operator-=(const HermitianForm& o) {
  if (num_vars_ != o.num_vars_) fail(ErrorKind::InvalidArgument, "mismatched variable counts");
  poly_ -= o.poly_;
  return *this;
}

HermitianForm operator*(const HermitianForm& a, const HermitianForm& b) {
  if (a.num_vars_ != b.num_vars_) fail(ErrorKind::InvalidArgument, "mismatched variable counts");
  return HermitianForm::from_poly(a.num_vars_, a.poly_ * b.poly_);
}

HermitianForm operator*(const RadicalScalar& c, const HermitianForm& a) {
  return HermitianForm::from_poly(a.num_vars_, a.poly_ * c);
}

std::string HermitianForm::to_string() const {
  if (poly_.is_zero()) return "0";
  std::string out;
  for (auto it = poly_.terms().rbegin(); it != poly_.terms().rend(); ++it) {
    auto [a, b] = split(it->first);
    std::string mono;
    for (std::size_t k = 0; k < num_vars_; ++k) {
      if (a[k]) mono += "*z" + std::to_string(k + 1) + (a[k] > 1 ? "^" + std::to_string(a[k]) : "");
    }
    for (std::size_t k = 0; k < num_vars_; ++k) {
      if (b[k]) mono += "*zbar" + std::to_string(k + 1) + (b[k] > 1 ? "^" + std::to_string(b[k]) : "");
    }
    std::string c = it->second.to_string();
    bool neg = it->second.is_rational() && sgn(it->second.rational_value()) < 0;
    if (neg) c = (-it->second).to_string();
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (c == "1" && !mono.empty())
      out += mono.substr(1);
    else
      out += (c.find(' ') == std::string::npos ? c : "(" + c + ")") + mono;
  }
  return out;
}

HermitianForm squared_norm(std::span<const Poly> components) {
  if (components.empty()) fail(ErrorKind::InvalidArgument, "squared_norm of an empty component list");
  const std::size_t n = components[0].num_vars();
  HermitianForm h(n);
  for (const auto& p : components) {
    if (p.num_vars() != n) fail(ErrorKind::InvalidArgument, "squared_norm: mismatched variable counts");
    h += HermitianForm::product(p, p);
  }
  return h;
}

std::size_t hermitian_rank(const HermitianForm& h) { return hermitian_inertia(h.coefficient_matrix()).rank(); }

std::pair<std::size_t, std::size_t> hermitian_signature(const HermitianForm& h) {
  Inertia in = hermitian_inertia(h.coefficient_matrix());
  return {in.positive, in.negative};
}

FormDivision divide_by(const HermitianForm& h, const HermitianForm& g) {
  if (h.num_vars() != g.num_vars()) fail(ErrorKind::InvalidArgument, "divide_by: mismatched variable counts");
  Poly::Division d = h.poly().divide(g.poly());
  return {HermitianForm::from_poly(h.num_vars(), std::move(d.quotient)),
          HermitianForm::from_poly(h.num_vars(), std::move(d.remainder))};
}

std::size_t span_dimension(std::span<const Poly> polys) {
  if (polys.empty()) return 0;
  const std::size_t n = polys[0].num_vars();
  std::map<Monomial, std::size_t, GrlexLess> cols;
  for (const auto& p : polys) {
    if (p.num_vars() != n) fail(ErrorKind::InvalidArgument, "span_dimension: mismatched variable counts");
    for (const auto& [m, c] : p.terms()) cols.emplace(m, 0);
  }
  std::size_t k = 0;
  for (auto& [m, idx] : cols) idx = k++;
  Matrix mat(polys.size(), cols.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) mat.at(r, cols[m]) = c;
  return rank(std::move(mat));
}

}  // namespace annulus
