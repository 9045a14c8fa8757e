#ifndef ANNULUS_CLASSIFY_HPP
#define ANNULUS_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "annulus/rational_map.hpp"

namespace annulus {

/// ||p||^2 = (b0 + b1 (||z||^2 - 1)) |q|^2 + Q2 (||z||^2 - 1)(||z||^2 - s)
struct GapCertificate {
  Rational s;
  RadicalScalar b0;
  RadicalScalar b1;
  HermitianForm q2;
};

/// Solves for b0, b1 and Q2 of bidegree at most (e, e), e = max(deg p, deg q + 1) - 2.
/// Throws NotCertified when the system has no solution.
GapCertificate gap_certificate(const RationalMap& f, const Rational& s);
/// Re-expands the identity.
bool check_gap_certificate(const RationalMap& f, const GapCertificate& cert);

/// d when q is constant and ||p||^2 = |q|^2 ||z||^{2d}.
std::optional<unsigned> is_homogeneous_equivalent(const RationalMap& f);

enum class Verdict { UnitaryIdentity, AffineEmbedding, Homogeneous, JuxtapositionLike, Unclassified };
std::string to_string(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Unclassified;
  Rational s;
  Rational t;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  unsigned degree = 0;
  std::size_t embedding_dim = 0;    // N_f
  std::size_t linear_span_dim = 0;  // rank of the components
  std::size_t k_f = 0;
  std::optional<SphereSpectrum> spectrum;  // absent when the coefficients are outside Q(i)
  SpherePairCertificate outer;  // (1, 1)
  SpherePairCertificate inner;  // (s, t)
  std::optional<GapCertificate> gap;
  std::optional<Rational> c_squared;  // AffineEmbedding: c^2 = (t - s) / (1 - s)
  std::optional<RadicalScalar> c;
  std::optional<unsigned> homogeneous_degree;
  std::vector<std::string> ruled_out;  // why each known class failed (Unclassified)
  std::vector<std::string> notes;
};

/// Throws NotCertified when (1, 1) or (s, t) fails, Contradiction when a
/// cross-check between independent routes disagrees.
ClassificationReport classify_annulus_map(const RationalMap& f, const Rational& s, const Rational& t,
                                          const HyperplaneRankOptions& options = {});

enum class Class23 { AffineEmbedding = 1, Homogeneous = 2 };

struct Classification23 {
  Class23 cls;
  unsigned degree;
  bool affine_test;
  bool homogeneous_test;
};

/// n = 2, N = 3.  Exactly one of the two tests must pass; otherwise a
/// Contradiction naming the falsified statement.
Classification23 classify_2_3(const RationalMap& f, const Rational& s, const Rational& t);

}  // namespace annulus

#endif
