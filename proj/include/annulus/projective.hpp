#ifndef ANNULUS_PROJECTIVE_HPP
#define ANNULUS_PROJECTIVE_HPP

#include <optional>
#include <vector>

#include "annulus/linalg.hpp"
#include "annulus/rational_map.hpp"

namespace annulus {

/// F = (F_0, ..., F_N) in z_0..z_n, all homogeneous of one degree; F_0 is the
/// homogenized denominator.
struct HomogeneousMap {
  std::vector<Poly> F;
  unsigned degree = 0;

  std::size_t source_dim() const { return F.empty() ? 0 : F[0].num_vars() - 1; }
  std::size_t target_dim() const { return F.empty() ? 0 : F.size() - 1; }
};

HomogeneousMap homogenize(const RationalMap& f);
/// z_0 = 1
RationalMap dehomogenize(const HomogeneousMap& F);

/// Hermitian (m+1) x (m+1) matrix of signature (m, 1).
class HermitianSphereMatrix {
 public:
  explicit HermitianSphereMatrix(Matrix m);
  std::size_t size() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

/// diag(-s, 1, ..., 1) of size m + 1.
HermitianSphereMatrix zero_centered_sphere(std::size_t m, const Rational& s);

/// <M a, b> = sum_ij M_ij a_j conj(b_i) as a polynomial in (z, wbar).
HermitianForm polarized_pairing(const Matrix& m, const std::vector<Poly>& a);

/// Quotient G(z, wbar) with <M_tgt F(z), F(w)> = G * <M_src z, w>, if it exists.
std::optional<HermitianForm> verify_segre_inclusion(const HomogeneousMap& F, const HermitianSphereMatrix& src,
                                                    const HermitianSphereMatrix& tgt);

struct InducedPair {
  Matrix S;  // (n+1) x (n+1)
  Matrix T;  // (N+1) x (N+1)
  RadicalScalar lambda;
};

/// S = J_n A, T = J_N B with F(S w) = lambda T F(w), checked on every coefficient.
/// Needs k_f = N - 1; `k_f` is recomputed from `options` when not supplied.
InducedPair induced_automorphisms(const HomogeneousMap& F, const HermitianSphereMatrix& a,
                                  const HermitianSphereMatrix& b, std::optional<std::size_t> k_f = std::nullopt,
                                  const HyperplaneRankOptions& options = {});

/// (s^j, t^j) for j = 1..k, each re-certified.  0 < s < 1 and 0 < t < 1.
std::vector<std::pair<Rational, Rational>> sphere_orbit(const RationalMap& f, const Rational& s, const Rational& t,
                                                        unsigned k, const HyperplaneRankOptions& options = {});

}  // namespace annulus

#endif
