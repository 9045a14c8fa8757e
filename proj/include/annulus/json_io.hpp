#ifndef ANNULUS_JSON_IO_HPP
#define ANNULUS_JSON_IO_HPP

#include <string>
#include <vector>

#include "annulus/classify.hpp"
#include "annulus/projective.hpp"
#include "annulus/rational_map.hpp"
#include "json.hpp"

namespace annulus {

using json = nlohmann::json;

// Rationals are "num/den" strings; a RadicalScalar is an array of
// {radicand, re, im} with the radicand as a decimal string.
json to_json(const Rational& r);
json to_json(const RadicalScalar& c);
json to_json(const Poly& p);
json to_json(const HermitianForm& h);
json to_json(const UPoly& p);
json to_json(const Matrix& m);
json to_json(const RationalMap& f);
json to_json(const SpherePairCertificate& cert);
json to_json(const SphereSpectrum& spec);
json to_json(const GapCertificate& gap);
json to_json(const InducedPair& pair);
json to_json(const ClassificationReport& rep);

Rational rational_from_json(const json& j);
RadicalScalar scalar_from_json(const json& j);
Poly poly_from_json(const json& j);
HermitianForm form_from_json(const json& j);
Matrix matrix_from_json(const json& j);
RationalMap map_from_json(const json& j);

/// Re-verifies every witness in a report produced by the reporting layer,
/// expanding each identity with plain ring arithmetic (no division).
struct CheckResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return checked > 0 && failures.empty(); }
};
CheckResult check_report(const json& report);

}  // namespace annulus

#endif
