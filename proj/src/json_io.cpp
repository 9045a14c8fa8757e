#include "annulus/json_io.hpp"

#include "annulus/error.hpp"

namespace annulus {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RadicalScalar& c) {
  json out = json::array();
  for (const auto& [m, g] : c.terms()) out.push_back({{"radicand", m.get_str()}, {"re", to_string(g.re)}, {"im", to_string(g.im)}});
  return out;
}

json to_json(const Poly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponents", it->first}, {"coeff", to_json(it->second)}});
  return {{"num_vars", p.num_vars()}, {"terms", terms}};
}

json to_json(const HermitianForm& h) {
  json terms = json::array();
  for (auto it = h.poly().terms().rbegin(); it != h.poly().terms().rend(); ++it) {
    auto [a, b] = h.split(it->first);
    terms.push_back({{"z", a}, {"zbar", b}, {"coeff", to_json(it->second)}});
  }
  return {{"num_vars", h.num_vars()}, {"terms", terms}};
}

json to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RationalMap& f) {
  json comps = json::array(), text = json::array();
  for (const auto& p : f.components()) {
    comps.push_back(to_json(p));
    text.push_back(p.to_string());
  }
  return {{"source_dim", f.source_dim()},
          {"target_dim", f.target_dim()},
          {"components", comps},
          {"denominator", to_json(f.denominator())},
          {"text", {{"components", text}, {"denominator", f.denominator().to_string()}}}};
}

json to_json(const SpherePairCertificate& cert) {
  return {{"s", to_json(cert.s)}, {"t", to_json(cert.t)}, {"quotient", to_json(cert.quotient)}};
}

json to_json(const SphereSpectrum& spec) {
  json isolated = json::array();
  for (const auto& p : spec.isolated) {
    json item;
    if (p.s.exact) {
      item["s"] = to_json(*p.s.exact);
    } else {
      item["s"] = {{"defining", to_json(p.s.defining)}, {"lo", to_json(p.s.lo)}, {"hi", to_json(p.s.hi)}};
    }
    item["t"] = p.t ? to_json(*p.t) : json({{"numerator", to_json(p.t_numerator)}, {"denominator", to_json(p.t_denominator)}});
    item["certified"] = p.certified;
    isolated.push_back(item);
  }
  json out = {{"eliminant", to_json(spec.eliminant)}, {"isolated", isolated}, {"continuum", nullptr}};
  if (spec.continuum)
    out["continuum"] = {{"numerator", to_json(spec.continuum->numerator)},
                        {"denominator", to_json(spec.continuum->denominator)}};
  return out;
}

json to_json(const GapCertificate& gap) {
  return {{"s", to_json(gap.s)}, {"b0", to_json(gap.b0)}, {"b1", to_json(gap.b1)}, {"q2", to_json(gap.q2)}};
}

json to_json(const InducedPair& pair) {
  return {{"S", to_json(pair.S)}, {"T", to_json(pair.T)}, {"lambda", to_json(pair.lambda)}};
}

json to_json(const ClassificationReport& rep) {
  json out = {{"verdict", to_string(rep.verdict)},
              {"s", to_json(rep.s)},
              {"t", to_json(rep.t)},
              {"degree", rep.degree},
              {"N_f", rep.embedding_dim},
              {"linear_span", rep.linear_span_dim},
              {"k_f", rep.k_f},
              {"certificates", {to_json(rep.outer), to_json(rep.inner)}},
              {"spectrum", rep.spectrum ? to_json(*rep.spectrum) : json(nullptr)},
              {"gap_certificate", rep.gap ? to_json(*rep.gap) : json(nullptr)},
              {"ruled_out", rep.ruled_out},
              {"notes", rep.notes}};
  if (rep.c_squared) out["c_squared"] = to_json(*rep.c_squared);
  if (rep.c) out["c"] = to_json(*rep.c);
  if (rep.homogeneous_degree) out["homogeneous_degree"] = *rep.homogeneous_degree;
  return out;
}

namespace {
[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidArgument, "malformed JSON: " + what); }
}  // namespace

Rational rational_from_json(const json& j) {
  if (!j.is_string()) bad("rational must be a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    bad("rational '" + j.get<std::string>() + "'");
  }
}

RadicalScalar scalar_from_json(const json& j) {
  if (!j.is_array()) bad("scalar must be an array of {radicand, re, im}");
  std::vector<RadicalScalar::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("radicand") || !t.contains("re") || !t.contains("im")) bad("scalar term");
    Integer m;
    if (t["radicand"].is_string()) {
      if (m.set_str(t["radicand"].get<std::string>(), 10) != 0) bad("radicand");
    } else if (t["radicand"].is_number_integer()) {
      m = Integer(t["radicand"].get<long>());
    } else {
      bad("radicand");
    }
    if (m <= 0) bad("radicand must be positive");
    terms.emplace_back(m, GaussRational(rational_from_json(t["re"]), rational_from_json(t["im"])));
  }
  return RadicalScalar::from_terms(terms);
}

Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_vars") || !j.contains("terms")) bad("polynomial");
  std::size_t n = j["num_vars"].get<std::size_t>();
  Poly p(n);
  for (const auto& t : j["terms"]) {
    Monomial m = t.at("exponents").get<Monomial>();
    if (m.size() != n) bad("exponent vector length");
    p.add_term(m, scalar_from_json(t.at("coeff")));
  }
  return p;
}

HermitianForm form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_vars") || !j.contains("terms")) bad("form");
  std::size_t n = j["num_vars"].get<std::size_t>();
  Poly p(2 * n);
  for (const auto& t : j["terms"]) {
    Monomial a = t.at("z").get<Monomial>(), b = t.at("zbar").get<Monomial>();
    if (a.size() != n || b.size() != n) bad("form exponent length");
    a.insert(a.end(), b.begin(), b.end());
    p.add_term(a, scalar_from_json(t.at("coeff")));
  }
  return HermitianForm::from_poly(n, std::move(p));
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix");
  Matrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != m.cols()) bad("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

RationalMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("denominator")) bad("map");
  std::vector<Poly> comps;
  for (const auto& c : j["components"]) comps.push_back(poly_from_json(c));
  return RationalMap(std::move(comps), poly_from_json(j["denominator"]));
}

}  // namespace annulus
