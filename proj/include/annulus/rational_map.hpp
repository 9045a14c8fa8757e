#ifndef ANNULUS_RATIONAL_MAP_HPP
#define ANNULUS_RATIONAL_MAP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "annulus/hermitian.hpp"
#include "annulus/poly.hpp"
#include "annulus/upoly.hpp"

namespace annulus {

/// f = (p_1, ..., p_N) / q : C^n --> C^N.
class RationalMap {
 public:
  RationalMap(std::vector<Poly> components, Poly denominator);
  /// Denominator 1.
  static RationalMap polynomial(std::vector<Poly> components);

  std::size_t source_dim() const noexcept { return denominator_.num_vars(); }
  std::size_t target_dim() const noexcept { return components_.size(); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  const Poly& denominator() const noexcept { return denominator_; }
  /// {q, p_1, ..., p_N}
  std::vector<Poly> homogeneous_vector() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.components_ == b.components_ && a.denominator_ == b.denominator_;
  }

 private:
  std::vector<Poly> components_;
  Poly denominator_;
};

unsigned degree(const RationalMap& f);

/// ||p||^2 - t |q|^2
HermitianForm sphere_defect(const RationalMap& f, const Rational& t);

/// Witness for f(sqrt(s) S) in sqrt(t) S: ||p||^2 - t|q|^2 = quotient * (||z||^2 - s).
struct SpherePairCertificate {
  Rational s;
  Rational t;
  HermitianForm quotient;
};

/// Certificate iff (||z||^2 - s) divides ||p||^2 - t |q|^2.  Throws for
/// nonpositive radii and when q vanishes identically on the sphere.
std::optional<SpherePairCertificate> maps_sphere_to_sphere(const RationalMap& f, const Rational& s,
                                                           const Rational& t);

/// One isolated invariant sphere pair.  The source radius is exact or an
/// isolating interval of a root of `s.defining`; t is c(s)/d(s) evaluated
/// at that root (and exact whenever s is).
struct InvariantPair {
  RealRoot s;
  std::optional<Rational> t;
  UPoly t_numerator;
  UPoly t_denominator;
  bool certified = false;  // re-verified by maps_sphere_to_sphere
};

/// t = numerator(s) / denominator(s) for every s.
struct ContinuumBranch {
  UPoly numerator;
  UPoly denominator;
};

struct SphereSpectrum {
  std::vector<InvariantPair> isolated;  // sorted by decreasing s
  std::optional<ContinuumBranch> continuum;
  UPoly eliminant;  // gcd of the cross resultants (zero for a continuum)
};

/// Every zero-centred sphere pair (s, t), s in (0, 1], t > 0, with f(sqrt(s) S) in sqrt(t) S.
/// Requires the pairwise Hermitian products of the coefficients to be
/// Gaussian rationals (checked; throws Precondition otherwise).
SphereSpectrum invariant_spheres(const RationalMap& f);

/// dim of the smallest affine subspace containing the image: span{q, p} - 1.
std::size_t embedding_dimension(const RationalMap& f);
/// dim of the smallest linear subspace containing the image: span{p}.
std::size_t linear_span_dimension(const RationalMap& f);

struct HyperplaneRankOptions {
  unsigned trials = 8;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool exact = false;
};

/// Monte Carlo k_f: max over random rational hyperplanes of the affine
/// dimension of the image.  Never overestimates; deterministic in the seed.
std::size_t hyperplane_rank(const RationalMap& f, unsigned trials, std::uint64_t seed, unsigned threads = 1);
/// k_f over the generic hyperplane z_n = c + sum b_i z_i with c, b symbolic.
std::size_t hyperplane_rank_exact(const RationalMap& f);
std::size_t hyperplane_rank(const RationalMap& f, const HyperplaneRankOptions& options);
/// Affine dimension of f(a + V t); V must have rank n - 1.
std::size_t hyperplane_rank_on(const RationalMap& f, std::span<const RadicalScalar> base,
                               const std::vector<std::vector<RadicalScalar>>& directions);

}  // namespace annulus

#endif
