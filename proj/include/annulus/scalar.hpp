#ifndef ANNULUS_SCALAR_HPP
#define ANNULUS_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace annulus {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);  // "p", "p/q", "-p/q"
std::string to_string(const Rational& r);          // always "num/den"
std::string to_short_string(const Rational& r);    // "num" when den == 1

// n = square^2 * squarefree, for n > 0.  Trial division up to the cube root is
// enough: what remains afterwards is 1, a prime, a prime square, or a product
// of two distinct primes, and a perfect-square test tells these apart.
struct SquarefreeSplit {
  Integer square_root;
  Integer squarefree;
};
SquarefreeSplit squarefree_split(const Integer& n);
bool is_squarefree(const Integer& n);

/// Gaussian rational a + b i.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Exact complex number sum_m c_m * sqrt(m) over squarefree positive radicands m
/// with Gaussian-rational coefficients c_m.
///
/// Terms are kept sorted by radicand with no zero coefficients, so the
/// representation is canonical: square roots of distinct squarefree integers
/// are linearly independent over Q(i), hence structural equality is
/// mathematical equality and the zero scalar is the empty term list.
class RadicalScalar {
 public:
  using Term = std::pair<Integer, GaussRational>;

  RadicalScalar() = default;
  RadicalScalar(long v) : RadicalScalar(Rational(v)) {}  // NOLINT(implicit)
  RadicalScalar(const Rational& r) : RadicalScalar(GaussRational(r)) {}  // NOLINT(implicit)
  RadicalScalar(const GaussRational& g);  // NOLINT(implicit)

  /// coeff * sqrt(m); m must be a positive squarefree integer.
  static RadicalScalar radical(const Integer& m, const GaussRational& coeff = GaussRational(1));
  static RadicalScalar imaginary_unit();
  /// Builds a scalar from arbitrary (radicand, coefficient) terms, merging and
  /// rejecting radicands that are not squarefree.
  static RadicalScalar from_terms(const std::vector<Term>& terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_gauss_rational() const noexcept;
  bool is_rational() const noexcept;
  bool is_real() const noexcept;
  /// Single term q*sqrt(m).
  bool is_simple() const noexcept { return terms_.size() <= 1; }
  GaussRational gauss_value() const;  // requires is_gauss_rational()
  Rational rational_value() const;    // requires is_rational()

  RadicalScalar conj() const;
  RadicalScalar real_part() const;
  RadicalScalar imag_part() const;  // returned as a real scalar
  /// Multiplicative inverse in Q(i)(sqrt m_1, ..., sqrt m_k); throws on zero.
  RadicalScalar inverse() const;
  /// Exact sign of a real scalar: -1, 0, +1.  Throws if any imaginary part is nonzero.
  int sign_of_real() const;
  std::complex<double> to_complex() const;

  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  RadicalScalar& operator/=(const RadicalScalar& o) { return *this *= o.inverse(); }

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  friend RadicalScalar operator/(RadicalScalar a, const RadicalScalar& b) { return a /= b; }
  friend RadicalScalar operator-(const RadicalScalar& a);
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);
  friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

RadicalScalar mul(const RadicalScalar& a, const RadicalScalar& b);
int sign_of_real(const RadicalScalar& a);
/// Square root of r > 0 as q*sqrt(m).
RadicalScalar sqrt_of_positive_rational(const Rational& r);
/// Compares |a| and |b| for real scalars: -1, 0, +1.
int compare_magnitude(const RadicalScalar& a, const RadicalScalar& b);

}  // namespace annulus

#endif
