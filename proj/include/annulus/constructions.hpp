#ifndef ANNULUS_CONSTRUCTIONS_HPP
#define ANNULUS_CONSTRUCTIONS_HPP

#include <random>

#include "annulus/linalg.hpp"
#include "annulus/rational_map.hpp"

namespace annulus {

/// Square matrix with U* U = I checked exactly on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m);
  static UnitaryMatrix identity(std::size_t n);
  /// Row k of the result is row perm[k] of the identity.
  static UnitaryMatrix permutation(const std::vector<std::size_t>& perm);
  /// diag(1, ..., 1, [[a, -b], [b, a]], 1, ...) acting on coordinates i < j; a^2 + b^2 = 1.
  static UnitaryMatrix rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& a, const Rational& b);
  static UnitaryMatrix phase(std::size_t n, std::size_t i, const GaussRational& unit);

  std::size_t size() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
  friend UnitaryMatrix direct_sum(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  struct Unchecked {};
  UnitaryMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}
  Matrix m_;
};

/// Product of random permutations, phases (i, -1) and Pythagorean rotations.
/// Entries stay Gaussian rational.
UnitaryMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// H_d: one component sqrt(multinomial) z^a per degree-d monomial, z1^d first.
RationalMap homogeneous_map(std::size_t n, unsigned d);

/// sqrt(1 - t) f + sqrt(t) g
RationalMap juxtapose(const RationalMap& f, const RationalMap& g, const Rational& t);

/// z -> sqrt((1-t)/(1-s)) z + sqrt((t-s)/(1-s)) + 0, with N - n - 1 zero slots.
RationalMap affine_embedding(std::size_t n, std::size_t N, const Rational& s, const Rational& t);

/// sqrt(1 - c^2) f + c + 0 padding up to N components.  A zero c adds no constant slot.
RationalMap pad_and_shift(const RationalMap& f, std::size_t N, const Rational& c);

/// Components replaced by U p.
RationalMap apply_target_unitary(const UnitaryMatrix& u, const RationalMap& f);
/// f(V z)
RationalMap apply_source_unitary(const RationalMap& f, const UnitaryMatrix& v);

}  // namespace annulus

#endif
