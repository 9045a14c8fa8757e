#ifndef ANNULUS_POLY_HPP
#define ANNULUS_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "annulus/scalar.hpp"

namespace annulus {

/// Exponent vector; its length is the number of variables of the ambient ring.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);

// Graded lexicographic order: total degree first, then the first differing
// exponent (z1 > z2 > ...).  The largest monomial is the leading one.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All exponent vectors in `num_vars` variables of total degree exactly `degree`,
/// in descending grlex order (z1^d first).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Sparse multivariate polynomial over RadicalScalar.
class Poly {
 public:
  using TermMap = std::map<Monomial, RadicalScalar, GrlexLess>;

  explicit Poly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Poly constant(std::size_t num_vars, const RadicalScalar& c);
  /// c * z_{index+1} (index is zero-based)
  static Poly variable(std::size_t num_vars, std::size_t index, const RadicalScalar& c = RadicalScalar(1));
  static Poly monomial(const Monomial& m, const RadicalScalar& c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Monomial& leading_monomial() const;
  const RadicalScalar& leading_coeff() const;
  RadicalScalar coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const RadicalScalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const RadicalScalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const RadicalScalar& c) { return a *= c; }
  friend Poly operator*(const RadicalScalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const;
  /// Conjugates every coefficient (not the variables).
  Poly conj_coeffs() const;
  /// Multiplies by the monomial x^m.
  Poly shifted(const Monomial& m) const;

  struct Division;
  /// Single-divisor division: *this = quotient * g + remainder with no
  /// remainder term divisible by the leading monomial of g.
  Division divide(const Poly& g) const;

  /// p(images[0], ..., images[n-1]); all images share one ring.
  Poly substitute(std::span<const Poly> images) const;
  /// Re-embeds into a ring with `new_num_vars` variables, variable i going to i + offset.
  Poly embed(std::size_t new_num_vars, std::size_t offset) const;

  /// Expression in the map-description grammar with variables prefix1, prefix2, ...
  std::string to_string(const std::string& prefix = "z") const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

struct Poly::Division {
  Poly quotient;
  Poly remainder;
};

/// p(a + V t) where V has num_vars rows; the result lives in (columns of V) variables.
Poly substitute_affine(const Poly& p, std::span<const RadicalScalar> base,
                       const std::vector<std::vector<RadicalScalar>>& directions);

std::size_t count_nonzero_coeffs(const Poly& p);

}  // namespace annulus

#endif
