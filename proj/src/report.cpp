#include "annulus/report.hpp"

#include <sstream>

#include "annulus/error.hpp"

namespace annulus {

namespace {

json kf_mode(const HyperplaneRankOptions& o) {
  if (o.exact) return {{"mode", "exact"}};
  return {{"mode", "random"}, {"trials", o.trials}, {"seed", o.seed}};
}

UPoly upoly_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return UPoly(std::move(c));
}

std::string short_rat(const json& j) { return to_short_string(rational_from_json(j)); }

}  // namespace

json invariants_json(const RationalMap& f, const HyperplaneRankOptions& options) {
  json out = {{"kind", "invariants"},
              {"map", to_json(f)},
              {"degree", degree(f)},
              {"N_f", embedding_dimension(f)},
              {"linear_span", linear_span_dimension(f)},
              {"k_f", hyperplane_rank(f, options)},
              {"k_f_mode", kf_mode(options)}};
  json certs = json::array();
  try {
    SphereSpectrum spec = invariant_spheres(f);
    out["spectrum"] = to_json(spec);
    for (const auto& p : spec.isolated)
      if (p.certified) certs.push_back(to_json(*maps_sphere_to_sphere(f, *p.s.exact, *p.t)));
    // a continuum is witnessed at a few sample radii
    if (spec.continuum)
      for (const Rational& s : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        Rational den = spec.continuum->denominator(s);
        if (sgn(den) == 0) continue;
        Rational t = spec.continuum->numerator(s) / den;
        if (sgn(t) <= 0) continue;
        if (auto c = maps_sphere_to_sphere(f, s, t)) certs.push_back(to_json(*c));
      }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Precondition) throw;
    out["spectrum"] = nullptr;
    out["notes"] = {std::string("spectrum not computed: ") + e.what()};
  }
  out["certificates"] = certs;
  return out;
}

json verify_json(const RationalMap& f, const Rational& s, const Rational& t) {
  auto cert = maps_sphere_to_sphere(f, s, t);
  if (!cert)
    fail(ErrorKind::NotCertified, "not certified: ||p||^2 - " + to_short_string(t) +
                                      "|q|^2 leaves a nonzero remainder modulo ||z||^2 - " + to_short_string(s));
  return {{"kind", "verify"}, {"map", to_json(f)}, {"certificates", {to_json(*cert)}}};
}

json classify_json(const RationalMap& f, const Rational& s, const Rational& t, const HyperplaneRankOptions& options) {
  json out = to_json(classify_annulus_map(f, s, t, options));
  out["kind"] = "classify";
  out["map"] = to_json(f);
  out["k_f_mode"] = kf_mode(options);
  return out;
}

json classify_2_3_json(const RationalMap& f, const Rational& s, const Rational& t) {
  Classification23 c = classify_2_3(f, s, t);
  return {{"kind", "classify_2_3"},
          {"map", to_json(f)},
          {"s", to_json(s)},
          {"t", to_json(t)},
          {"class", static_cast<int>(c.cls)},
          {"degree", c.degree},
          {"affine_test", c.affine_test},
          {"homogeneous_test", c.homogeneous_test},
          {"certificates", {to_json(*maps_sphere_to_sphere(f, 1, 1)), to_json(*maps_sphere_to_sphere(f, s, t))}}};
}

json orbit_json(const RationalMap& f, const Rational& s, const Rational& t, unsigned k,
                const HyperplaneRankOptions& options) {
  auto pairs = sphere_orbit(f, s, t, k, options);
  InducedPair induced = induced_automorphisms(homogenize(f), zero_centered_sphere(f.source_dim(), s),
                                              zero_centered_sphere(f.target_dim(), t), std::nullopt, options);
  json certs = json::array();
  certs.push_back(to_json(*maps_sphere_to_sphere(f, 1, 1)));
  for (const auto& [sj, tj] : pairs) certs.push_back(to_json(*maps_sphere_to_sphere(f, sj, tj)));
  return {{"kind", "orbit"},
          {"map", to_json(f)},
          {"s", to_json(s)},
          {"t", to_json(t)},
          {"k", k},
          {"induced", to_json(induced)},
          {"certificates", certs}};
}

namespace {

void render_spectrum(std::ostream& os, const json& spec) {
  if (spec.is_null()) {
    os << "spectrum: not computed\n";
    return;
  }
  if (!spec["continuum"].is_null()) {
    UPoly num = upoly_from_json(spec["continuum"]["numerator"]);
    UPoly den = upoly_from_json(spec["continuum"]["denominator"]);
    os << "spectrum: continuum t = " << num.to_string();
    if (!(den == UPoly::constant(1))) os << " / (" << den.to_string() << ")";
    os << "\n";
    return;
  }
  os << "spectrum: " << spec["isolated"].size() << " isolated pair(s), eliminant "
     << upoly_from_json(spec["eliminant"]).to_string() << "\n";
  for (const auto& p : spec["isolated"]) {
    os << "  s = ";
    if (p["s"].is_string())
      os << short_rat(p["s"]);
    else
      os << "root of " << upoly_from_json(p["s"]["defining"]).to_string() << " in (" << short_rat(p["s"]["lo"])
         << ", " << short_rat(p["s"]["hi"]) << "]";
    os << ", t = ";
    if (p["t"].is_string())
      os << short_rat(p["t"]);
    else
      os << "(" << upoly_from_json(p["t"]["numerator"]).to_string() << ") / ("
         << upoly_from_json(p["t"]["denominator"]).to_string() << ")";
    os << (p["certified"].get<bool>() ? "  [certified]" : "") << "\n";
  }
}

void render_certificates(std::ostream& os, const json& certs) {
  for (const auto& c : certs) {
    os << "certificate (" << short_rat(c["s"]) << ", " << short_rat(c["t"])
       << "): ||p||^2 - t|q|^2 = G * (||z||^2 - s), G = " << form_from_json(c["quotient"]).to_string() << "\n";
  }
}

std::string matrix_text(const json& m) {
  Matrix a = matrix_from_json(m);
  std::string out = "[";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < a.cols(); ++c) out += (c ? ", " : "") + a.at(r, c).to_string();
  }
  return out + "]";
}

void render_kf(std::ostream& os, const json& r) {
  os << "k_f = " << r["k_f"].get<std::size_t>();
  if (r.contains("k_f_mode")) {
    const json& m = r["k_f_mode"];
    if (m["mode"] == "exact")
      os << " (exact)";
    else
      os << " (trials " << m["trials"].get<unsigned>() << ", seed " << m["seed"].get<std::uint64_t>() << ")";
  }
  os << "\n";
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream os;
  const std::string kind = r.value("kind", "");
  const json& map = r["map"];
  os << "map: n = " << map["source_dim"].get<std::size_t>() << ", N = " << map["target_dim"].get<std::size_t>() << "\n";
  if (kind == "invariants") {
    os << "degree = " << r["degree"].get<unsigned>() << "\n";
    os << "N_f = " << r["N_f"].get<std::size_t>() << "\n";
    os << "linear span = " << r["linear_span"].get<std::size_t>() << "\n";
    render_kf(os, r);
    render_spectrum(os, r["spectrum"]);
  } else if (kind == "verify") {
    render_certificates(os, r["certificates"]);
  } else if (kind == "classify") {
    os << "verdict: " << r["verdict"].get<std::string>();
    if (r.contains("c")) os << " (s = " << short_rat(r["s"]) << ", t = " << short_rat(r["t"]) << ", c = " << scalar_from_json(r["c"]).to_string() << ")";
    if (r.contains("homogeneous_degree")) os << " (d = " << r["homogeneous_degree"].get<unsigned>() << ")";
    os << "\n";
    os << "degree = " << r["degree"].get<unsigned>() << ", N_f = " << r["N_f"].get<std::size_t>()
       << ", linear span = " << r["linear_span"].get<std::size_t>() << "\n";
    render_kf(os, r);
    render_spectrum(os, r["spectrum"]);
    render_certificates(os, r["certificates"]);
    if (!r["gap_certificate"].is_null()) {
      const json& g = r["gap_certificate"];
      os << "gap: b0 = " << scalar_from_json(g["b0"]).to_string() << ", b1 = " << scalar_from_json(g["b1"]).to_string()
         << ", Q2 = " << form_from_json(g["q2"]).to_string() << "\n";
    }
    for (const auto& s : r["ruled_out"]) os << "ruled out: " << s.get<std::string>() << "\n";
    for (const auto& s : r["notes"]) os << "note: " << s.get<std::string>() << "\n";
  } else if (kind == "classify_2_3") {
    int c = r["class"].get<int>();
    os << "class " << c << (c == 1 ? ": affine embedding" : ": unitary twist of H2") << "\n";
    render_certificates(os, r["certificates"]);
  } else if (kind == "orbit") {
    const json& ind = r["induced"];
    os << "S = " << matrix_text(ind["S"]) << "\n";
    os << "T = " << matrix_text(ind["T"]) << "\n";
    os << "lambda = " << scalar_from_json(ind["lambda"]).to_string() << "\n";
    os << "orbit:";
    for (std::size_t k = 1; k < r["certificates"].size(); ++k)
      os << " (" << short_rat(r["certificates"][k]["s"]) << ", " << short_rat(r["certificates"][k]["t"]) << ")";
    os << "\n";
    for (std::size_t k = 1; k < r["certificates"].size(); ++k)
      os << "  pair " << k << " re-certified\n";
  } else {
    fail(ErrorKind::InvalidArgument, "unknown report kind '" + kind + "'");
  }
  return os.str();
}

}  // namespace annulus
