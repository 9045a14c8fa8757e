// Independent re-verification of report witnesses.  Everything here is
// re-expanded from the raw map with Poly ring operations only, so it shares
// no code path with the division-based certificate search.
#include "annulus/error.hpp"
#include "annulus/json_io.hpp"

namespace annulus {

namespace {

Poly in_z(const Poly& p) { return p.embed(2 * p.num_vars(), 0); }
Poly in_wbar(const Poly& p) { return p.conj_coeffs().embed(2 * p.num_vars(), p.num_vars()); }

Poly pairing(const Poly& a, const Poly& b) { return in_z(a) * in_wbar(b); }

Poly norm_squared(const std::vector<Poly>& ps, std::size_t n) {
  Poly acc(2 * n);
  for (const auto& p : ps) acc += pairing(p, p);
  return acc;
}

Poly sphere(std::size_t n, const Rational& s) {
  Poly acc = Poly::constant(2 * n, RadicalScalar(Rational(-s)));
  for (std::size_t k = 0; k < n; ++k) acc += pairing(Poly::variable(n, k), Poly::variable(n, k));
  return acc;
}

bool check_certificate(const RationalMap& f, const json& cert, std::string& why) {
  Rational s = rational_from_json(cert.at("s")), t = rational_from_json(cert.at("t"));
  HermitianForm g = form_from_json(cert.at("quotient"));
  const std::size_t n = f.source_dim();
  if (g.num_vars() != n) {
    why = "quotient lives in the wrong ring";
    return false;
  }
  Poly lhs = norm_squared(f.components(), n) - RadicalScalar(t) * pairing(f.denominator(), f.denominator());
  if (lhs != g.poly() * sphere(n, s)) {
    why = "||p||^2 - t|q|^2 != quotient * (||z||^2 - s) at (" + to_short_string(s) + ", " + to_short_string(t) + ")";
    return false;
  }
  return true;
}

bool check_gap(const RationalMap& f, const json& gap, std::string& why) {
  const std::size_t n = f.source_dim();
  Rational s = rational_from_json(gap.at("s"));
  RadicalScalar b0 = scalar_from_json(gap.at("b0")), b1 = scalar_from_json(gap.at("b1"));
  HermitianForm q2 = form_from_json(gap.at("q2"));
  Poly one = sphere(n, 1);
  Poly qq = pairing(f.denominator(), f.denominator());
  Poly rhs = (Poly::constant(2 * n, b0) + b1 * one) * qq + q2.poly() * one * sphere(n, s);
  if (norm_squared(f.components(), n) != rhs) {
    why = "gap decomposition does not re-expand";
    return false;
  }
  return true;
}

bool check_induced(const RationalMap& f, const json& induced, std::string& why) {
  const std::size_t n = f.source_dim(), N = f.target_dim();
  Matrix S = matrix_from_json(induced.at("S")), T = matrix_from_json(induced.at("T"));
  RadicalScalar lambda = scalar_from_json(induced.at("lambda"));
  if (S.rows() != n + 1 || S.cols() != n + 1 || T.rows() != N + 1 || T.cols() != N + 1) {
    why = "induced matrices have the wrong size";
    return false;
  }
  // homogenize by hand
  unsigned d = degree(f);
  std::vector<Poly> F;
  std::vector<Poly> sources{f.denominator()};
  sources.insert(sources.end(), f.components().begin(), f.components().end());
  for (const auto& p : sources) {
    Poly h(n + 1);
    for (const auto& [m, c] : p.terms()) {
      Monomial hm{d - total_degree(m)};
      hm.insert(hm.end(), m.begin(), m.end());
      h.add_term(hm, c);
    }
    F.push_back(std::move(h));
  }
  std::vector<Poly> sw;
  for (std::size_t r = 0; r <= n; ++r) {
    Poly row(n + 1);
    for (std::size_t c = 0; c <= n; ++c) row += Poly::variable(n + 1, c, S.at(r, c));
    sw.push_back(std::move(row));
  }
  for (std::size_t r = 0; r <= N; ++r) {
    Poly rhs(n + 1);
    for (std::size_t c = 0; c <= N; ++c) rhs += T.at(r, c) * F[c];
    if (F[r].substitute(sw) != lambda * rhs) {
      why = "F(S w) != lambda T F(w) in component " + std::to_string(r);
      return false;
    }
  }
  return true;
}

}  // namespace

CheckResult check_report(const json& report) {
  CheckResult out;
  if (!report.is_object() || !report.contains("map")) {
    out.failures.push_back("report carries no map");
    return out;
  }
  RationalMap f = map_from_json(report["map"]);
  auto run = [&](auto&& check, const json& item, const std::string& label) {
    std::string why;
    bool ok = false;
    try {
      ok = check(f, item, why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    ++out.checked;
    if (!ok) out.failures.push_back(label + ": " + why);
  };
  if (report.contains("certificates"))
    for (std::size_t k = 0; k < report["certificates"].size(); ++k)
      run(check_certificate, report["certificates"][k], "certificate " + std::to_string(k));
  if (report.contains("gap_certificate") && !report["gap_certificate"].is_null())
    run(check_gap, report["gap_certificate"], "gap certificate");
  if (report.contains("induced") && !report["induced"].is_null()) run(check_induced, report["induced"], "induced pair");
  return out;
}

}  // namespace annulus
