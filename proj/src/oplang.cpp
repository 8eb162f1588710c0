#include "qramsey/oplang.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace qramsey {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  int column() const { return static_cast<int>(pos) + 1; }

  // Column of the next token, so errors never point at whitespace.
  int next_column() {
    skip_ws();
    return column();
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw parse_error(column(), std::string("expected ") + what);
  }

  std::optional<BigInt> try_integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    BigInt v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::optional<std::string> try_identifier() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isalpha(c) && c != '_') return std::nullopt;
    size_t start = pos;
    while (pos < text.size()) {
      c = static_cast<unsigned char>(text[pos]);
      if (!std::isalnum(c) && c != '_') break;
      ++pos;
    }
    return text.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& t) : lex(t) {}

  OperatorPoly parse() {
    lex.skip_ws();
    if (lex.pos >= lex.text.size()) throw parse_error(1, "empty expression");
    OperatorPoly e = expr();
    lex.skip_ws();
    if (lex.pos < lex.text.size())
      throw parse_error(lex.column(),
                        std::string("unexpected character '") + lex.text[lex.pos] + "'");
    return e;
  }

  OperatorPoly expr() {
    bool negate = lex.accept('-');
    OperatorPoly acc = term();
    if (negate) acc = -Scalar::one() * acc;
    for (;;) {
      if (lex.accept('+'))
        acc = acc + term();
      else if (lex.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  OperatorPoly term() {
    OperatorPoly acc = factor();
    while (lex.accept('*')) acc = mul(acc, factor());
    return acc;
  }

  OperatorPoly factor() {
    OperatorPoly b = base();
    if (lex.accept('^')) {
      int col = lex.next_column();
      auto n = lex.try_integer();
      if (!n) throw parse_error(col, "exponent must be a natural number");
      if (*n > 64) throw parse_error(col, "exponent too large");
      return pow(b, n->convert_to<unsigned>());
    }
    return b;
  }

  OperatorPoly base() {
    OperatorPoly b = primary();
    while (lex.accept('/')) {
      int col = lex.next_column();
      if (auto n = lex.try_integer()) {
        if (*n == 0) throw parse_error(col, "division by zero");
        b = Scalar(GaussianRational(Rational(1) / Rational(*n))) * b;
      } else if (auto id = lex.try_identifier()) {
        if (*id != "hbar")
          throw parse_error(col, "can only divide by a number or hbar, not '" + *id + "'");
        b = Scalar::hbar(-1) * b;
      } else {
        throw parse_error(col, "can only divide by a number or hbar");
      }
    }
    return b;
  }

  OperatorPoly primary() {
    int col = lex.next_column();
    if (lex.accept('(')) {
      OperatorPoly e = expr();
      lex.expect(')', "')'");
      return e;
    }
    if (auto n = lex.try_integer()) return OperatorPoly::constant(Scalar(GaussianRational(Rational(*n))));
    if (auto id = lex.try_identifier()) {
      if (*id == "i") return OperatorPoly::constant(Scalar::unit_i());
      if (*id == "hbar") return OperatorPoly::constant(Scalar::hbar(1));
      if (is_builtin_poly(*id)) return builtin_poly(*id);
      throw parse_error(col, "unknown identifier '" + *id + "'");
    }
    if (lex.pos >= lex.text.size()) throw parse_error(col, "unexpected end of expression");
    throw parse_error(col, std::string("unexpected character '") + lex.text[lex.pos] + "'");
  }
};

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

// Renders |g| (g pure real or pure imaginary) as factor text; "" means 1.
std::string unsigned_gaussian_factor(const GaussianRational& g) {
  if (g.im == 0) {
    Rational mag = g.re < 0 ? Rational(-g.re) : g.re;
    return mag == 1 ? std::string() : rational_string(mag);
  }
  Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
  if (mag == 1) return "i";
  return rational_string(mag) + "*i";
}

bool negative_sign(const GaussianRational& g) {
  if (g.im == 0) return g.re < 0;
  if (g.re == 0) return g.im < 0;
  return false;  // mixed: rendered in parentheses with its own signs
}

std::string format_scalar_sum(const Scalar& s);

// One hbar-power term of a scalar, sign stripped; "" means 1.
std::string scalar_term_body(int e, const GaussianRational& g) {
  std::string out;
  auto append_factor = [&out](const std::string& f) {
    if (f.empty()) return;
    if (!out.empty()) out += "*";
    out += f;
  };
  if (g.re != 0 && g.im != 0) {
    GaussianRational re_part(g.re), im_part(Rational(0), g.im);
    std::string body = scalar_term_body(0, re_part);
    if (body.empty()) body = "1";
    if (negative_sign(re_part)) body = "-" + body;
    std::string imb = scalar_term_body(0, im_part);
    if (imb.empty()) imb = "1";
    append_factor("(" + body + (negative_sign(im_part) ? " - " : " + ") + imb + ")");
  } else {
    append_factor(unsigned_gaussian_factor(g));
  }
  if (e > 0) append_factor(e == 1 ? "hbar" : "hbar^" + std::to_string(e));
  if (e < 0) {
    if (out.empty()) out = "1";
    for (int j = 0; j < -e; ++j) out += "/hbar";
  }
  return out;
}

std::string format_scalar_sum(const Scalar& s) {
  std::string out;
  for (const auto& [e, g] : s.terms()) {
    bool neg = negative_sign(g);
    std::string body = scalar_term_body(e, g);
    if (body.empty()) body = "1";
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string monomial_body(const Monomial& m) {
  std::string out;
  for (int g = 0; g < kNumGenerators; ++g) {
    unsigned e = m.exps[g];
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += generator_name(static_cast<Generator>(g));
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

OperatorPoly parse_operator(const std::string& text) { return Parser(text).parse(); }

std::string format_operator(const OperatorPoly& A) {
  if (A.is_zero()) return "0";
  std::string out;
  for (const auto& [m, s] : A.terms()) {
    bool neg = false;
    std::string coeff;
    if (s.terms().size() == 1) {
      const auto& [e, g] = *s.terms().begin();
      neg = negative_sign(g);
      GaussianRational mag = neg ? -g : g;
      coeff = scalar_term_body(e, mag);
    } else {
      coeff = "(" + format_scalar_sum(s) + ")";
    }
    std::string body = monomial_body(m);
    std::string piece;
    if (coeff.empty())
      piece = body.empty() ? "1" : body;
    else if (body.empty())
      piece = coeff;
    else
      piece = coeff + "*" + body;
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace qramsey
