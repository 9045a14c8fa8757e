// One PASS/FAIL line per acceptance criterion.  Usage: acceptance FIXTURE_DIR
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/support.hpp"
#include "annulus/annulus.h"
#include "annulus/classify.hpp"
#include "annulus/constructions.hpp"
#include "annulus/error.hpp"
#include "annulus/io.hpp"
#include "annulus/json_io.hpp"
#include "annulus/projective.hpp"
#include "annulus/report.hpp"

using namespace annulus;
using testing::binom;

namespace {

std::string fixture_dir;

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_dir + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A failed expectation aborts the criterion with a message.
struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
void expect(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

Rational pw(const Rational& s, unsigned d) {
  Rational r = 1;
  for (unsigned k = 0; k < d; ++k) r *= s;
  return r;
}

HermitianForm norm_pow(std::size_t n, unsigned d) {
  HermitianForm h = HermitianForm::constant(n, 1);
  for (unsigned k = 0; k < d; ++k) h = h * HermitianForm::sphere(n, 0);
  return h;
}

HermitianForm shifted_norm(std::size_t n, const Rational& s) {
  return HermitianForm::sphere(n, 0) + HermitianForm::constant(n, RadicalScalar(s));
}

// s in (0, 1) with small denominators
Rational rnd_radius(std::mt19937_64& rng) {
  long den = 2 + static_cast<long>(rng() % 9);
  long num = 1 + static_cast<long>(rng() % (den - 1));
  return make_rational(num, den);
}

std::size_t kf8(const RationalMap& f, std::uint64_t seed) { return hyperplane_rank(f, 8, seed); }

// ---------------------------------------------------------------------------

std::string criterion1() {
  RationalMap f = parse_map(read_fixture("cubic6.map"));
  expect(degree(f) == 3, "degree != 3");
  expect(embedding_dimension(f) == 6, "N_f != 6");
  for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 42ULL, 987654321ULL})
    expect(kf8(f, seed) == 3, "k_f != 3 at seed " + std::to_string(seed));
  SphereSpectrum sp = invariant_spheres(f);
  expect(!sp.continuum, "unexpected continuum");
  expect(sp.isolated.size() == 2, "expected exactly 2 isolated pairs, got " + std::to_string(sp.isolated.size()));
  const std::pair<Rational, Rational> want[] = {{1, 1}, {make_rational(1, 4), make_rational(1, 16)}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& p = sp.isolated[k];
    expect(p.s.exact && p.t, "pair is not rational");
    expect(*p.s.exact == want[k].first && *p.t == want[k].second, "wrong pair " + to_short_string(*p.s.exact));
    expect(p.certified, "pair not certified");
  }
  return "degree 3, N_f 6, k_f 3 (5 seeds), spectrum {(1,1), (1/4,1/16)}";
}

std::string criterion2() {
  int cases = 0;
  for (std::size_t n = 2; n <= 3; ++n)
    for (unsigned d = 1; d <= 3; ++d) {
      RationalMap h = homogeneous_map(n, d);
      std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      expect(squared_norm(h.components()) == norm_pow(n, d), tag + ": ||H_d||^2 != ||z||^2d");
      expect(Integer(h.target_dim()) == binom(static_cast<unsigned>(n + d - 1), d), tag + ": wrong N");
      expect(kf8(h, 1) + 1 == h.target_dim(), tag + ": k_f != N - 1");
      expect(hyperplane_rank_exact(h) + 1 == h.target_dim(), tag + ": exact k_f != N - 1");
      SphereSpectrum sp = invariant_spheres(h);
      expect(sp.continuum.has_value(), tag + ": no continuum");
      std::vector<Rational> c(d + 1);
      c[d] = 1;
      expect(sp.continuum->numerator == UPoly(c) * sp.continuum->denominator, tag + ": continuum is not s^d");
      ++cases;
    }
  return std::to_string(cases) + " (n, d) cases: norm identity, N, k_f = N - 1, continuum s^d";
}

std::string criterion3() {
  std::mt19937_64 rng(2024);
  int pairs = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 20; ++k) {
      Rational s1 = testing::rnd_positive(rng), s2 = testing::rnd_positive(rng);
      if (k % 2) {
        s1 = -s1;
        s2 = -s2;
      }
      expect(Integer(hermitian_rank(shifted_norm(n, s1) * shifted_norm(n, s2))) == binom(static_cast<unsigned>(n + 2), 2),
             "rank != C(n+2,2)");
      ++pairs;
    }
  expect(hermitian_rank(shifted_norm(1, 1) * shifted_norm(1, -1)) == 2, "(|z|^2+1)(|z|^2-1) rank != 2");

  for (int k = 0; k < 500; ++k) {
    std::size_t n = 1 + k % 3;
    HermitianForm q(n);
    while (q.is_zero()) {
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < terms; ++j) {
        Poly g = testing::rnd_poly(rng, n, n == 3 ? 1 : 2, 3);
        if (g.is_zero()) continue;
        if (rng() % 2)
          q += HermitianForm::product(g, g);
        else
          q -= HermitianForm::product(g, g);
      }
    }
    Rational s1 = testing::rnd_positive(rng), s2 = testing::rnd_positive(rng);
    if (k % 2) {
      s1 = -s1;
      s2 = -s2;
    }
    expect(Integer(hermitian_rank(q * shifted_norm(n, s1) * shifted_norm(n, s2))) >=
               binom(static_cast<unsigned>(n + 2), 2),
           "Q-multiplied rank below C(n+2,2)");
  }

  for (int k = 0; k < 500; ++k) {
    std::size_t n = 1 + k % 3;
    Poly q(n);
    while (q.is_zero()) {
      Poly r = testing::rnd_poly(rng, n, 3, 4);
      for (const auto& [m, c] : r.terms()) q.add_term(m, RadicalScalar(c.gauss_value().re));
    }
    Rational s1 = testing::rnd_positive(rng), s2 = testing::rnd_positive(rng);
    if (k % 2) {
      s1 = -s1;
      s2 = -s2;
    }
    Poly sum(n);
    for (std::size_t i = 0; i < n; ++i) sum += Poly::variable(n, i);
    Poly r = q * (sum + Poly::constant(n, RadicalScalar(s1))) * (sum + Poly::constant(n, RadicalScalar(s2)));
    expect(Integer(count_nonzero_coeffs(r)) >= binom(static_cast<unsigned>(n + 2), 2), "diagonal count below C(n+2,2)");
  }
  return std::to_string(pairs) + " same-sign pairs, opposite-sign example, 500 Q ranks, 500 diagonal counts";
}

struct Member {
  RationalMap f;
  Rational s, t;
  std::string label;
};

std::vector<Member> gap_corpus() {
  std::mt19937_64 rng(4242);
  std::vector<Member> out;
  for (int k = 0; k < 30; ++k) {
    std::size_t n = 2 + k % 2, N = n + 1 + rng() % 3;
    Rational s = rnd_radius(rng), t = rnd_radius(rng);
    if (t < s) std::swap(s, t);
    RationalMap f = affine_embedding(n, N, s, t);
    if (k % 3 == 0) f = apply_target_unitary(random_unitary(N, rng), f);
    if (k % 3 == 1) f = apply_source_unitary(f, random_unitary(n, rng));
    out.push_back({f, s, t, "embedding"});
  }
  for (int k = 0; k < 10; ++k) {
    std::size_t n = 2 + k % 2;
    Rational s = rnd_radius(rng);
    out.push_back({apply_target_unitary(random_unitary(n, rng), homogeneous_map(n, 1)), s, s, "unitary"});
  }
  for (int k = 0; k < 30; ++k) {
    std::size_t n = 2 + k % 2;
    unsigned d = 1 + static_cast<unsigned>(k % 3);
    Rational s = rnd_radius(rng);
    RationalMap h = homogeneous_map(n, d);
    std::size_t N = h.target_dim() + 1 + rng() % 2;
    Rational c = make_rational(static_cast<long>(rng() % 4), 5);
    out.push_back({pad_and_shift(h, N, c), s, (1 - c * c) * pw(s, d) + c * c, "padding"});
  }
  for (int k = 0; k < 20; ++k) {
    std::size_t n = 2 + k % 2;
    unsigned d = 2 + static_cast<unsigned>(k % 2);
    Rational s = rnd_radius(rng);
    RationalMap h = homogeneous_map(n, d);
    h = apply_source_unitary(apply_target_unitary(random_unitary(h.target_dim(), rng), h), random_unitary(n, rng));
    out.push_back({h, s, pw(s, d), "twist"});
  }
  for (int k = 0; k < 20; ++k) {
    std::size_t n = 2 + k % 2;
    unsigned d1 = 1 + static_cast<unsigned>(rng() % 3), d2 = 1 + static_cast<unsigned>(rng() % 3);
    Rational w = rnd_radius(rng), s = rnd_radius(rng);
    RationalMap j = juxtapose(homogeneous_map(n, d1), homogeneous_map(n, d2), w);
    out.push_back({j, s, (1 - w) * pw(s, d1) + w * pw(s, d2), "juxtaposition"});
  }
  return out;
}

std::string criterion4() {
  std::vector<Member> corpus = gap_corpus();
  expect(corpus.size() >= 100, "corpus too small");
  int deg1 = 0, higher = 0;
  for (const auto& m : corpus) {
    const std::size_t n = m.f.source_dim();
    expect(maps_sphere_to_sphere(m.f, 1, 1) && maps_sphere_to_sphere(m.f, m.s, m.t), m.label + ": not certified");
    ClassificationReport r = classify_annulus_map(m.f, m.s, m.t);
    std::size_t nf = r.embedding_dim;
    if (r.degree > 1) {
      ++higher;
      expect(!(n < nf && Integer(nf) < binom(static_cast<unsigned>(n + 1), 2)),
             m.label + ": degree > 1 with n < N_f < C(n+1,2)");
    } else {
      ++deg1;
      bool ok = (r.verdict == Verdict::UnitaryIdentity && m.s == m.t) ||
                (r.verdict == Verdict::AffineEmbedding && m.t >= m.s);
      expect(ok, m.label + ": degree-1 member classified as " + to_string(r.verdict));
    }
  }
  return std::to_string(corpus.size()) + " certified maps (" + std::to_string(deg1) + " degree 1, " +
         std::to_string(higher) + " higher), no gap violation";
}

std::string criterion5() {
  for (unsigned d = 2; d <= 3; ++d)
    for (const Rational& s : {make_rational(1, 4), make_rational(1, 2), make_rational(2, 3)}) {
      std::string tag = "d=" + std::to_string(d) + " s=" + to_short_string(s);
      RationalMap h = homogeneous_map(2, d);
      HomogeneousMap F = homogenize(h);
      const std::size_t N = F.target_dim();
      InducedPair p = induced_automorphisms(F, zero_centered_sphere(2, s), zero_centered_sphere(N, pw(s, d)));
      std::vector<RadicalScalar> sd{RadicalScalar(s), 1, 1}, td(N + 1, RadicalScalar(1));
      td[0] = RadicalScalar(pw(s, d));
      expect(p.S == Matrix::diagonal(sd), tag + ": S != diag(s,1,1)");
      expect(p.T == Matrix::diagonal(td), tag + ": T != diag(s^d,1,...,1)");
      expect(p.lambda == RadicalScalar(1), tag + ": lambda != 1");
      // F(S w) = lambda T F(w), coefficient by coefficient
      std::vector<Poly> sw{Poly::variable(3, 0, RadicalScalar(s)), Poly::variable(3, 1), Poly::variable(3, 2)};
      for (std::size_t j = 0; j <= N; ++j) {
        Poly lhs = F.F[j].substitute(sw), rhs(3);
        for (std::size_t c = 0; c <= N; ++c)
          if (!p.T.at(j, c).is_zero()) rhs += p.T.at(j, c) * F.F[c];
        expect(lhs == p.lambda * rhs, tag + ": F(Sw) != lambda T F(w)");
      }
      auto orbit = sphere_orbit(h, s, pw(s, d), 4);
      expect(orbit.size() == 4, tag + ": orbit length");
      for (unsigned j = 1; j <= 4; ++j) {
        expect(orbit[j - 1].first == pw(s, j) && orbit[j - 1].second == pw(s, j * d), tag + ": orbit pair");
        expect(maps_sphere_to_sphere(h, orbit[j - 1].first, orbit[j - 1].second).has_value(), tag + ": re-certify");
      }
    }
  RationalMap f = parse_map(read_fixture("cubic6.map"));
  bool refused = false;
  try {
    induced_automorphisms(homogenize(f), zero_centered_sphere(2, make_rational(1, 4)),
                          zero_centered_sphere(6, make_rational(1, 16)));
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::Precondition && std::string(e.what()).find("k_f = 3") != std::string::npos;
  }
  expect(refused, "degree-3 example was not refused with k_f < N - 1");
  return "H2, H3 at 3 radii: S, T, lambda = 1, F(Sw) = TF(w), 4-step orbits; degree-3 example refused";
}

std::string criterion6() {
  std::mt19937_64 rng(66);
  for (int k = 0; k < 20; ++k) {
    Rational s = rnd_radius(rng), t = rnd_radius(rng);
    if (t < s) std::swap(s, t);
    RationalMap a = affine_embedding(2, 3, s, t);
    if (k % 2) a = apply_target_unitary(random_unitary(3, rng), a);
    Classification23 c = classify_2_3(a, s, t);
    expect(c.cls == Class23::AffineEmbedding, "affine embedding not class 1");
    expect(!(c.affine_test && c.homogeneous_test), "both tests passed");
  }
  for (int k = 0; k < 20; ++k) {
    Rational s = rnd_radius(rng);
    RationalMap h = apply_target_unitary(random_unitary(3, rng), homogeneous_map(2, 2));
    Classification23 c = classify_2_3(h, s, s * s);
    expect(c.cls == Class23::Homogeneous, "twisted H2 not class 2");
    expect(!(c.affine_test && c.homogeneous_test), "both tests passed");
  }
  return "20 embeddings -> class 1, 20 twisted H2 -> class 2, no theorem-falsified diagnostic";
}

std::string criterion7() {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 2 + k % 2;
    unsigned d1 = 1 + static_cast<unsigned>(rng() % 3), d2;
    do d2 = 1 + static_cast<unsigned>(rng() % 3);
    while (d2 == d1);
    Rational w = rnd_radius(rng);
    RationalMap j = juxtapose(homogeneous_map(n, d1), homogeneous_map(n, d2), w);
    if (k % 4 == 0) j = apply_target_unitary(random_unitary(j.target_dim(), rng), j);
    std::size_t kf = kf8(j, rng()), nf = embedding_dimension(j);
    expect(kf + 2 <= nf, "k_f = " + std::to_string(kf) + " > N_f - 2 = " + std::to_string(nf) + " - 2");
  }
  return "200 juxtapositions with k_f <= N_f - 2";
}

std::string take(char* s) {
  std::string out = s ? s : "";
  annulus_string_free(s);
  return out;
}

std::string criterion8() {
  const char* names[] = {"cubic6.map", "h2.map", "whitney.map", "affine.map", "juxt_h1_h2.map", "rotated_h2.map"};
  for (const char* name : names) {
    MapDocument d = parse_map_document(read_fixture(name));
    std::string text = serialize_map(d.map, d.sphere_pairs);
    MapDocument back = parse_map_document(text);
    expect(back.map == d.map && back.sphere_pairs == d.sphere_pairs, std::string(name) + ": round-trip changed the map");
    expect(serialize_map(back.map, back.sphere_pairs) == text, std::string(name) + ": serialization not stable");
  }

  // same seed, any thread count: same report
  RationalMap f = parse_map(read_fixture("cubic6.map"));
  HyperplaneRankOptions a, b;
  a.seed = b.seed = 99;
  b.threads = 4;
  expect(invariants_json(f, a).dump() == invariants_json(f, a).dump(), "invariants differ across runs");
  expect(invariants_json(f, a).dump() == invariants_json(f, b).dump(), "invariants depend on thread count");
  expect(classify_json(f, make_rational(1, 4), make_rational(1, 16), a).dump() ==
             classify_json(f, make_rational(1, 4), make_rational(1, 16), b).dump(),
         "classification differs across runs");

  // --json witnesses through the C entry point
  annulus_kf_options o;
  annulus_kf_options_default(&o);
  o.seed = 7;
  int checked = 0;
  struct Job {
    const char* fixture;
    const char* s;
    const char* t;
  };
  const Job jobs[] = {{"cubic6.map", "1/4", "1/16"}, {"h2.map", "1/4", "1/16"}, {"affine.map", "1/4", "1/2"},
                      {"juxt_h1_h2.map", "1/4", "5/32"}, {"rotated_h2.map", "1/9", "1/81"}};
  for (const auto& job : jobs) {
    annulus_map* m = nullptr;
    expect(annulus_map_parse(read_fixture(job.fixture).c_str(), &m) == ANNULUS_OK, "C parse failed");
    char* out = nullptr;
    std::vector<std::string> reports;
    if (annulus_invariants(m, &o, 1, &out) == ANNULUS_OK) reports.push_back(take(out));
    if (annulus_classify(m, job.s, job.t, &o, 1, &out) == ANNULUS_OK) reports.push_back(take(out));
    if (annulus_verify(m, job.s, job.t, 1, &out) == ANNULUS_OK) reports.push_back(take(out));
    annulus_map_free(m);
    expect(reports.size() == 3, std::string(job.fixture) + ": a report failed: " + annulus_last_error());
    for (const auto& r : reports) {
      char* summary = nullptr;
      annulus_status st = annulus_check_json(r.c_str(), &summary);
      std::string text = take(summary);
      expect(st == ANNULUS_OK, std::string(job.fixture) + ": checker rejected a report: " + text);
      ++checked;
    }
  }
  return "6 fixtures round-trip, reports deterministic, " + std::to_string(checked) + " JSON reports re-verified";
}

}  // namespace

int main(int argc, char** argv) {
  fixture_dir = argc > 1 ? argv[1] : "tests/fixtures";
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"degree-3 example fixture", criterion1},
      {"homogeneous suite", criterion2},
      {"hermitian rank suite", criterion3},
      {"gap corpus", criterion4},
      {"induced automorphisms and orbits", criterion5},
      {"2 -> 3 classification", criterion6},
      {"juxtaposition bound", criterion7},
      {"round-trip, determinism, checker", criterion8},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string detail;
    bool ok = false;
    try {
      detail = criteria[k].second();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    failed += ok ? 0 : 1;
    std::printf("criterion %zu [%s] %s: %s\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
