#ifndef ANNULUS_REPORT_HPP
#define ANNULUS_REPORT_HPP

#include <string>

#include "annulus/json_io.hpp"

namespace annulus {

// Text or JSON renderings shared by the C API and the command-line tool.
// JSON reports always embed the map so check_report can re-verify them.

json invariants_json(const RationalMap& f, const HyperplaneRankOptions& options);
json verify_json(const RationalMap& f, const Rational& s, const Rational& t);  // throws NotCertified
json classify_json(const RationalMap& f, const Rational& s, const Rational& t, const HyperplaneRankOptions& options);
json classify_2_3_json(const RationalMap& f, const Rational& s, const Rational& t);
json orbit_json(const RationalMap& f, const Rational& s, const Rational& t, unsigned k,
                const HyperplaneRankOptions& options);

/// Human-readable rendering of any of the reports above.
std::string render_text(const json& report);

}  // namespace annulus

#endif
