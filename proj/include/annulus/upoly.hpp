#ifndef ANNULUS_UPOLY_HPP
#define ANNULUS_UPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "annulus/scalar.hpp"

namespace annulus {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
  static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  struct DivMod;
  DivMod divmod(const UPoly& d) const;

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UPoly::DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

std::vector<UPoly> sturm_sequence(const UPoly& p);
/// Number of distinct real roots in (lo, hi].
std::size_t count_roots(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi);

/// A real root: exact when rational, otherwise (defining polynomial, isolating interval (lo, hi]).
struct RealRoot {
  std::optional<Rational> exact;
  UPoly defining;
  Rational lo;
  Rational hi;
};

/// Distinct real roots of p in (lo, hi], ascending.  p must be nonzero.
std::vector<RealRoot> real_roots(const UPoly& p, const Rational& lo, const Rational& hi);

/// Shrinks an irrational root's interval to width <= width.
void refine_root(RealRoot& root, const Rational& width);

/// Sign of q at an irrational root of `root.defining` (refining the interval as needed).
int sign_at_root(const UPoly& q, RealRoot& root);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace annulus

#endif
