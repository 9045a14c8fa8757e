#include "annulus/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "annulus/error.hpp"

namespace annulus {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    fail(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_string(r);
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (sgn(n) <= 0) fail(ErrorKind::InvalidArgument, "squarefree_split needs a positive integer");
  Integer rest = n;
  Integer root = 1;
  Integer free = 1;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2) free *= p;
  };
  strip(Integer(2));
  for (Integer p = 3; p * p * p <= rest; p += 2) strip(p);
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      root *= s;
    } else {
      free *= rest;
    }
  }
  return {root, free};
}

bool is_squarefree(const Integer& n) { return sgn(n) > 0 && squarefree_split(n).square_root == 1; }

GaussRational GaussRational::inverse() const {
  Rational nrm = norm();
  if (sgn(nrm) == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  return {re / nrm, -im / nrm};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

RadicalScalar::RadicalScalar(const GaussRational& g) {
  if (!g.is_zero()) terms_.emplace_back(Integer(1), g);
}

RadicalScalar RadicalScalar::radical(const Integer& m, const GaussRational& coeff) {
  if (!is_squarefree(m)) fail(ErrorKind::InvalidArgument, "radicand " + m.get_str() + " is not squarefree");
  RadicalScalar r;
  if (!coeff.is_zero()) r.terms_.emplace_back(m, coeff);
  return r;
}

RadicalScalar RadicalScalar::imaginary_unit() { return RadicalScalar(GaussRational(0, 1)); }

RadicalScalar RadicalScalar::from_terms(const std::vector<Term>& terms) {
  std::map<Integer, GaussRational> acc;
  for (const auto& [m, c] : terms) {
    if (!is_squarefree(m)) fail(ErrorKind::InvalidArgument, "radicand " + m.get_str() + " is not squarefree");
    acc[m] += c;
  }
  RadicalScalar r;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

bool RadicalScalar::is_gauss_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

bool RadicalScalar::is_rational() const noexcept {
  return is_gauss_rational() && (terms_.empty() || terms_[0].second.is_real());
}

bool RadicalScalar::is_real() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_real(); });
}

GaussRational RadicalScalar::gauss_value() const {
  if (!is_gauss_rational()) fail(ErrorKind::Precondition, "scalar " + to_string() + " is not a Gaussian rational");
  return terms_.empty() ? GaussRational() : terms_[0].second;
}

Rational RadicalScalar::rational_value() const {
  if (!is_rational()) fail(ErrorKind::Precondition, "scalar " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].second.re;
}

RadicalScalar RadicalScalar::conj() const {
  RadicalScalar r = *this;
  for (auto& t : r.terms_) t.second.im = -t.second.im;
  return r;
}

RadicalScalar RadicalScalar::real_part() const {
  RadicalScalar r;
  for (const auto& [m, c] : terms_)
    if (sgn(c.re) != 0) r.terms_.emplace_back(m, GaussRational(c.re));
  return r;
}

RadicalScalar RadicalScalar::imag_part() const {
  RadicalScalar r;
  for (const auto& [m, c] : terms_)
    if (sgn(c.im) != 0) r.terms_.emplace_back(m, GaussRational(c.im));
  return r;
}

namespace {

// Merges two sorted term lists with sign +1/-1 on the second.
std::vector<RadicalScalar::Term> merge_terms(const std::vector<RadicalScalar::Term>& a,
                                             const std::vector<RadicalScalar::Term>& b, bool subtract) {
  std::vector<RadicalScalar::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      GaussRational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

// Pairwise coprime integers whose products give every input (inputs squarefree).
std::vector<Integer> coprime_base(const std::vector<Integer>& values) {
  std::vector<Integer> base;
  std::vector<Integer> work(values.begin(), values.end());
  while (!work.empty()) {
    Integer x = work.back();
    work.pop_back();
    if (x == 1) continue;
    bool split = false;
    for (std::size_t k = 0; k < base.size(); ++k) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), base[k].get_mpz_t());
      if (g == 1) continue;
      if (g == x && g == base[k]) {
        split = true;
        break;
      }
      Integer b = base[k];
      base.erase(base.begin() + static_cast<std::ptrdiff_t>(k));
      work.push_back(g);
      work.push_back(Integer(b / g));
      work.push_back(Integer(x / g));
      split = true;
      break;
    }
    if (!split) base.push_back(x);
  }
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second -= o.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  if (terms_.empty()) return *this;
  if (o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == 1 && o.terms_[0].first == 1) {
    terms_[0].second *= o.terms_[0].second;
    return *this;
  }
  // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd(m1, m2), both squarefree.
  std::map<Integer, GaussRational> acc;
  Integer g, m;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
      m = (m1 / g) * (m2 / g);
      acc[m] += c1 * c2 * GaussRational(Rational(g));
    }
  }
  terms_.clear();
  for (auto& [k, c] : acc)
    if (!c.is_zero()) terms_.emplace_back(k, std::move(c));
  return *this;
}

RadicalScalar operator-(const RadicalScalar& a) {
  RadicalScalar r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].first != b.terms_[k].first || !(a.terms_[k].second == b.terms_[k].second)) return false;
  return true;
}

RadicalScalar RadicalScalar::inverse() const {
  if (terms_.empty()) fail(ErrorKind::InvalidArgument, "division by zero");
  if (terms_.size() == 1) {
    // 1/(c sqrt m) = (1/(c m)) sqrt m
    const auto& [m, c] = terms_[0];
    RadicalScalar r;
    r.terms_.emplace_back(m, c.inverse() * GaussRational(Rational(1, 1) / Rational(m)));
    return r;
  }
  std::vector<Integer> radicands;
  for (const auto& t : terms_) radicands.push_back(t.first);
  std::vector<Integer> base = coprime_base(radicands);
  if (base.empty()) return RadicalScalar(gauss_value().inverse());
  // Split a = x + y sqrt(b); then a (x - y sqrt(b)) = x^2 - b y^2 no longer involves sqrt(b).
  const Integer& b = base.front();
  RadicalScalar conj_b;
  for (const auto& [m, c] : terms_) {
    if (mpz_divisible_p(m.get_mpz_t(), b.get_mpz_t()))
      conj_b.terms_.emplace_back(m, -c);
    else
      conj_b.terms_.emplace_back(m, c);
  }
  RadicalScalar reduced = *this * conj_b;
  return conj_b * reduced.inverse();
}

int RadicalScalar::sign_of_real() const {
  if (!is_real()) fail(ErrorKind::Precondition, "sign_of_real on a non-real scalar " + to_string());
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_[0].second.re);
  // Outward-rounded enclosures of each sqrt(m) with 2^-bits resolution,
  // doubling bits until the enclosure of the sum excludes zero.  The value
  // is nonzero (the terms are independent), so this terminates.
  for (unsigned long bits = 16;; bits *= 2) {
    Integer scale = 1;
    scale <<= bits;
    Rational lo = 0, hi = 0;
    for (const auto& [m, c] : terms_) {
      const Rational& coeff = c.re;
      if (m == 1) {
        lo += coeff;
        hi += coeff;
        continue;
      }
      Integer scaled = m * scale * scale;
      Integer root;
      mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
      Rational l(root, scale);
      Rational u(Integer(root + 1), scale);
      l.canonicalize();
      u.canonicalize();
      if (sgn(coeff) > 0) {
        lo += coeff * l;
        hi += coeff * u;
      } else {
        lo += coeff * u;
        hi += coeff * l;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

std::complex<double> RadicalScalar::to_complex() const {
  std::complex<double> z;
  for (const auto& [m, c] : terms_) {
    double root = std::sqrt(m.get_d());
    z += std::complex<double>(c.re.get_d() * root, c.im.get_d() * root);
  }
  return z;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto emit = [&out](const Rational& q, bool imaginary, const Integer& m) {
    bool negative = sgn(q) < 0;
    Rational mag = abs(q);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string body;
    if (mag != 1 || (!imaginary && m == 1)) body = to_short_string(mag);
    if (imaginary) body += (body.empty() ? "" : "*") + std::string("i");
    if (m != 1) body += (body.empty() ? "" : "*") + std::string("sqrt(") + m.get_str() + ")";
    out += body;
  };
  for (const auto& [m, c] : terms_) {
    if (sgn(c.re) != 0) emit(c.re, false, m);
    if (sgn(c.im) != 0) emit(c.im, true, m);
  }
  return out;
}

RadicalScalar mul(const RadicalScalar& a, const RadicalScalar& b) { return a * b; }

int sign_of_real(const RadicalScalar& a) { return a.sign_of_real(); }

RadicalScalar sqrt_of_positive_rational(const Rational& r) {
  if (sgn(r) <= 0) fail(ErrorKind::InvalidArgument, "square root of a nonpositive rational " + to_string(r));
  // sqrt(p/q) = sqrt(p q) / q
  Integer pq = r.get_num() * r.get_den();
  SquarefreeSplit split = squarefree_split(pq);
  Rational coeff(split.square_root, r.get_den());
  coeff.canonicalize();
  return RadicalScalar::radical(split.squarefree, GaussRational(coeff));
}

int compare_magnitude(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar abs_a = a.sign_of_real() < 0 ? -a : a;
  RadicalScalar abs_b = b.sign_of_real() < 0 ? -b : b;
  return (abs_a - abs_b).sign_of_real();
}

}  // namespace annulus
