#include "annulus/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "annulus/error.hpp"

namespace annulus {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End, Bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t col;  // zero-based offset into the expression
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(ch)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k = Tok::Bad;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: break;
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, std::size_t line, std::size_t column)
      : toks_(tokenize(text)), n_(n), line_(line), column_(column) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != Tok::End) error(peek(), "unexpected token");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void error(const Token& t, const std::string& msg) const {
    throw ParseError(line_, column_ + t.col, t.kind == Tok::End ? "end of input" : t.text, msg);
  }

  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) error(peek(), "expected " + what);
    ++pos_;
  }

  Poly expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    Poly acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Poly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (peek().kind == Tok::Star) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Rational rational_literal() {
    const Token& num = peek();
    if (num.kind != Tok::Number) error(num, "expected a rational number");
    ++pos_;
    Integer p(num.text), q(1);
    if (peek().kind == Tok::Slash) {
      ++pos_;
      const Token& den = peek();
      if (den.kind != Tok::Number) error(den, "expected a denominator");
      ++pos_;
      q = Integer(den.text);
      if (q == 0) error(den, "zero denominator");
    }
    return make_rational(p, q);
  }

  unsigned exponent() {
    const Token& t = peek();
    if (t.kind != Tok::Number) error(t, "expected a nonnegative integer exponent");
    ++pos_;
    if (t.text.size() > 4 || std::stoul(t.text) > 1000) error(t, "exponent too large");
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Poly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return Poly::constant(n_, RadicalScalar(rational_literal()));
      case Tok::LParen: {
        ++pos_;
        Poly p = expr();
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::Ident: {
        ++pos_;
        if (t.text == "i") return Poly::constant(n_, RadicalScalar::imaginary_unit());
        if (t.text == "sqrt") {
          expect(Tok::LParen, "'(' after sqrt");
          const Token& arg = peek();
          if (arg.kind != Tok::Number)
            error(arg, "non-representable coefficient: sqrt takes a positive rational literal");
          Rational r = rational_literal();
          if (sgn(r) <= 0) error(arg, "non-representable coefficient: sqrt of a nonpositive number");
          expect(Tok::RParen, "')'");
          return Poly::constant(n_, sqrt_of_positive_rational(r));
        }
        if (t.text.size() > 1 && t.text[0] == 'z' &&
            std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          std::size_t idx = t.text.size() > 6 ? 0 : std::stoul(t.text.substr(1));
          if (idx == 0 || idx > n_) error(t, "unknown variable (n = " + std::to_string(n_) + ")");
          return Poly::variable(n_, idx - 1);
        }
        error(t, "unknown identifier");
      }
      default:
        error(t, "expected a number, variable, sqrt(...) or '('");
    }
  }

  Poly factor() {
    Poly p = primary();
    while (peek().kind == Tok::Caret) {
      ++pos_;
      p = p.pow(exponent());
    }
    return p;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_;
  std::size_t line_;
  std::size_t column_;
};

struct Field {
  std::string value;
  std::size_t line;
  std::size_t column;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(const Field& f, const std::string& key) {
  if (f.value.empty() || f.value.size() > 6 ||
      !std::all_of(f.value.begin(), f.value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(f.line, f.column, f.value, key + " must be a positive integer");
  std::size_t v = std::stoul(f.value);
  if (v == 0) throw ParseError(f.line, f.column, f.value, key + " must be a positive integer");
  return v;
}

Rational parse_field_rational(const Field& f, std::string_view text, std::size_t col) {
  try {
    return parse_rational(std::string(text));
  } catch (const std::exception&) {
    throw ParseError(f.line, col, std::string(text), "expected a rational number");
  }
}

}  // namespace

Poly parse_expression(std::string_view text, std::size_t num_vars, std::size_t line, std::size_t column) {
  return Parser(text, num_vars, line, column).parse();
}

MapDocument parse_map_document(std::string_view text) {
  std::optional<Field> n_field, target_field, denominator;
  std::vector<Field> components, pairs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t col = 1;
    line = trim(line, col);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line_no, col, std::string(line), "expected key=value");
    std::size_t key_col = col;
    std::string key(trim(line.substr(0, eq), key_col));
    std::size_t value_col = col + eq + 1;
    std::string_view value = trim(line.substr(eq + 1), value_col);
    Field f{std::string(value), line_no, value_col};
    auto once = [&](std::optional<Field>& slot) {
      if (slot) throw ParseError(line_no, key_col, key, "duplicate key");
      slot = f;
    };
    if (key == "n")
      once(n_field);
    else if (key == "N")
      once(target_field);
    else if (key == "denominator")
      once(denominator);
    else if (key == "component")
      components.push_back(f);
    else if (key == "sphere_pair")
      pairs.push_back(f);
    else
      throw ParseError(line_no, key_col, key, "unknown key");
  }
  if (!n_field) throw ParseError(line_no + 1, 1, "", "missing n=");
  if (components.empty()) throw ParseError(line_no + 1, 1, "", "no component= lines");
  std::size_t n = parse_count(*n_field, "n");
  if (target_field && parse_count(*target_field, "N") != components.size())
    throw ParseError(target_field->line, target_field->column, target_field->value,
                     "N does not match the number of component= lines (" + std::to_string(components.size()) + ")");

  std::vector<Poly> comps;
  for (const Field& c : components) comps.push_back(parse_expression(c.value, n, c.line, c.column));
  Poly q = denominator ? parse_expression(denominator->value, n, denominator->line, denominator->column)
                       : Poly::constant(n, RadicalScalar(1));
  if (q.is_zero()) throw ParseError(denominator->line, denominator->column, denominator->value, "denominator is zero");
  MapDocument doc{RationalMap(std::move(comps), std::move(q)), {}};

  for (const Field& p : pairs) {
    std::string_view v = p.value;
    std::size_t sp = v.find_first_of(" \t");
    if (sp == std::string_view::npos) throw ParseError(p.line, p.column, p.value, "sphere_pair needs two radii");
    std::size_t tcol = p.column + sp;
    std::string_view tv = trim(v.substr(sp), tcol);
    Rational s = parse_field_rational(p, v.substr(0, sp), p.column);
    Rational t = parse_field_rational(p, tv, tcol);
    if (sgn(s) <= 0 || sgn(t) <= 0) throw ParseError(p.line, p.column, p.value, "sphere radii must be positive");
    if (!maps_sphere_to_sphere(doc.map, s, t))
      fail(ErrorKind::NotCertified, "line " + std::to_string(p.line) + ": declared sphere pair (" +
                                        to_short_string(s) + ", " + to_short_string(t) + ") does not certify");
    doc.sphere_pairs.emplace_back(s, t);
  }
  return doc;
}

RationalMap parse_map(std::string_view text) { return parse_map_document(text).map; }

std::string serialize_map(const RationalMap& f, const std::vector<std::pair<Rational, Rational>>& sphere_pairs) {
  std::string out = "n=" + std::to_string(f.source_dim()) + "\nN=" + std::to_string(f.target_dim()) + "\n";
  for (const auto& p : f.components()) out += "component=" + p.to_string() + "\n";
  out += "denominator=" + f.denominator().to_string() + "\n";
  for (const auto& [s, t] : sphere_pairs) out += "sphere_pair=" + to_short_string(s) + " " + to_short_string(t) + "\n";
  return out;
}

}  // namespace annulus
