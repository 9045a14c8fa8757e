#ifndef ANNULUS_HERMITIAN_HPP
#define ANNULUS_HERMITIAN_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "annulus/linalg.hpp"
#include "annulus/poly.hpp"

namespace annulus {

/// Real polynomial r(z, zbar) = sum c_{ab} z^a zbar^b in n complex variables.
///
/// Stored as a Poly in 2n variables (z_1..z_n, zbar_1..zbar_n); the same
/// container doubles as the polarized form r(z, wbar) in the Segre checks.
class HermitianForm {
 public:
  explicit HermitianForm(std::size_t num_vars = 0) : num_vars_(num_vars), poly_(2 * num_vars) {}
  /// Wraps a Poly in 2n variables.
  static HermitianForm from_poly(std::size_t num_vars, Poly poly);
  /// p(z) * conj(g(z))
  static HermitianForm product(const Poly& p, const Poly& g);
  static HermitianForm constant(std::size_t num_vars, const RadicalScalar& c);
  /// ||z||^2 - s
  static HermitianForm sphere(std::size_t num_vars, const RadicalScalar& s);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Poly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  /// c_{ba} = conj(c_{ab}) for every stored pair.
  bool is_hermitian() const;
  /// Exponent pair (a, b) of a 2n-variable monomial.
  std::pair<Monomial, Monomial> split(const Monomial& m) const;
  Monomial join(const Monomial& a, const Monomial& b) const;
  RadicalScalar coeff(const Monomial& a, const Monomial& b) const;

  /// Coefficient matrix over the monomials that actually occur (rows a, columns b).
  Matrix coefficient_matrix() const;
  std::vector<Monomial> basis() const;

  HermitianForm& operator+=(const HermitianForm& o);
  HermitianForm& operator-=(const HermitianForm& o);
  friend HermitianForm operator+(HermitianForm a, const HermitianForm& b) { return a += b; }
  friend HermitianForm operator-(HermitianForm a, const HermitianForm& b) { return a -= b; }
  friend HermitianForm operator*(const HermitianForm& a, const HermitianForm& b);
  friend HermitianForm operator*(const RadicalScalar& c, const HermitianForm& a);
  friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
    return a.num_vars_ == b.num_vars_ && a.poly_ == b.poly_;
  }
  friend bool operator!=(const HermitianForm& a, const HermitianForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t num_vars_;
  Poly poly_;
};

/// sum_j p_j(z) conj(p_j(z))
HermitianForm squared_norm(std::span<const Poly> components);

std::size_t hermitian_rank(const HermitianForm& h);
/// (positives, negatives) of the coefficient matrix
std::pair<std::size_t, std::size_t> hermitian_signature(const HermitianForm& h);

struct FormDivision {
  HermitianForm quotient;
  HermitianForm remainder;
};
/// h = quotient * g + remainder, graded-lex order on (z, zbar); g's leading
/// coefficient must be invertible.  remainder == 0 iff g divides h.
FormDivision divide_by(const HermitianForm& h, const HermitianForm& g);

/// Dimension of the span of the coefficient vectors.
std::size_t span_dimension(std::span<const Poly> polys);

}  // namespace annulus

#endif
