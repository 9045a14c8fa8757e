#include "annulus/upoly.hpp"

#include "annulus/error.hpp"

namespace annulus {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer lcm_den = 1;
  for (const auto& q : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& q : c_) {
    Integer v = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(c_.back()) < 0) content = -content;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return UPoly(std::move(out));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> out = a.c_;
  for (auto& q : out) q *= s;
  return UPoly(std::move(out));
}

UPoly::DivMod UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo;
  if (rem.size() >= d.c_.size()) quo.resize(rem.size() - d.c_.size() + 1);
  Rational inv = 1 / d.c_.back();
  for (std::size_t k = rem.size(); k-- >= d.c_.size();) {
    Rational f = rem[k] * inv;
    std::size_t shift = k - (d.c_.size() - 1);
    quo[shift] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) == 0) continue;
    bool neg = sgn(c_[k]) < 0;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    Rational mag = abs(c_[k]);
    std::string body;
    if (mag != 1 || k == 0) body = to_short_string(mag);
    if (k > 0) body += (body.empty() ? "" : "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
    out += body;
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return p.divmod(g).quotient;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  // Only positive rescaling keeps the sign pattern intact.
  auto normalize = [](const UPoly& q) { return abs(1 / q.leading()) * q; };
  seq.push_back(normalize(p));
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(normalize(d));
  while (true) {
    UPoly r = seq[seq.size() - 2].divmod(seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(normalize(Rational(-1) * r));
  }
  return seq;
}

namespace {
std::size_t sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

std::size_t count_roots(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi) {
  if (sturm.empty()) return 0;
  std::size_t a = sign_variations(sturm, lo), b = sign_variations(sturm, hi);
  return a >= b ? a - b : 0;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational tail = simplest_rational_between(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
  return Rational(fl) + 1 / tail;
}

std::vector<RealRoot> real_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "real_roots of the zero polynomial");
  UPoly q = squarefree_part(p).primitive();
  std::vector<RealRoot> out;
  if (q.degree() <= 0) return out;
  std::vector<UPoly> sturm = sturm_sequence(q);

  std::vector<std::pair<Rational, Rational>> intervals;
  auto isolate = [&](auto&& self, const Rational& a, const Rational& b) -> void {
    std::size_t k = count_roots(sturm, a, b);
    if (k == 0) return;
    if (k == 1) {
      intervals.emplace_back(a, b);
      return;
    }
    Rational mid = (a + b) / 2;
    self(self, a, mid);
    self(self, mid, b);
  };
  isolate(isolate, lo, hi);

  // A rational root of a primitive integer polynomial has denominator dividing
  // the leading coefficient L; distinct such fractions are >= 1/L^2 apart.
  Integer lead = abs(q.leading().get_num());
  Rational width(Integer(1), Integer(lead * lead * 2));
  width.canonicalize();

  UPoly irrational = q;
  std::vector<std::size_t> irrational_idx;
  for (auto& [a, b] : intervals) {
    RealRoot root;
    if (sgn(q(b)) == 0) {
      root.exact = b;
    } else {
      Rational l = a, h = b;
      while (h - l > width) {
        Rational mid = (l + h) / 2;
        if (sgn(q(mid)) == 0) {
          l = h = mid;
          break;
        }
        if (count_roots(sturm, l, mid) == 1)
          h = mid;
        else
          l = mid;
      }
      Rational c = (l == h) ? l : simplest_rational_between(l, h);
      // c == l would be the neighbouring interval's root, not this one
      if ((l == h || c != l) && sgn(q(c)) == 0) {
        root.exact = c;
      } else {
        root.lo = l;
        root.hi = h;
        irrational_idx.push_back(out.size());
      }
    }
    if (root.exact) {
      root.lo = root.hi = *root.exact;
      irrational = irrational.divmod(UPoly(std::vector<Rational>{-*root.exact, Rational(1)})).quotient;
    }
    out.push_back(std::move(root));
  }
  UPoly defining = irrational.primitive();
  for (std::size_t k : irrational_idx) out[k].defining = defining;
  for (auto& r : out)
    if (r.exact) r.defining = UPoly(std::vector<Rational>{-*r.exact, Rational(1)});
  return out;
}

void refine_root(RealRoot& root, const Rational& width) {
  if (root.exact) return;
  int slo = root.defining.sign_at(root.lo);
  while (root.hi - root.lo > width) {
    Rational mid = (root.lo + root.hi) / 2;
    int sm = root.defining.sign_at(mid);
    if (sm == 0) fail(ErrorKind::Contradiction, "irrational root landed on a rational point");
    if (sm != slo) {
      root.hi = mid;
    } else {
      root.lo = mid;
      slo = sm;
    }
  }
}

int sign_at_root(const UPoly& q, RealRoot& root) {
  if (root.exact) return q.sign_at(*root.exact);
  if (q.is_zero()) return 0;
  UPoly g = gcd(q, root.defining);
  if (g.degree() > 0 && count_roots(sturm_sequence(g), root.lo, root.hi) > 0) return 0;
  std::vector<UPoly> sq = sturm_sequence(squarefree_part(q));
  while (count_roots(sq, root.lo, root.hi) > 0) refine_root(root, (root.hi - root.lo) / 2);
  return q.sign_at(root.hi);
}

}  // namespace annulus
