#ifndef ANNULUS_IO_HPP
#define ANNULUS_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annulus/rational_map.hpp"

namespace annulus {

/// Parses one polynomial expression in z1..zn.
///
///   expr   := [sign] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 'i' | 'sqrt' '(' rational ')' | 'z' nat | factor '^' nat | '(' expr ')'
///
/// `line` and `column` locate the expression's first character in the
/// enclosing document for error messages.
Poly parse_expression(std::string_view text, std::size_t num_vars, std::size_t line = 1, std::size_t column = 1);

/// Flat key=value document: n=, N=, component= (repeated), denominator=,
/// sphere_pair=s t (repeated).  '#' starts a comment.
struct MapDocument {
  RationalMap map;
  std::vector<std::pair<Rational, Rational>> sphere_pairs;
};

/// Declared sphere pairs are re-certified; a failure throws NotCertified.
MapDocument parse_map_document(std::string_view text);
RationalMap parse_map(std::string_view text);

std::string serialize_map(const RationalMap& f, const std::vector<std::pair<Rational, Rational>>& sphere_pairs = {});

}  // namespace annulus

#endif
