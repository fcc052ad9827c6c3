#include "wildforms/parser.hpp"

#include <cctype>
#include <sstream>

#include "wildforms/error.hpp"

namespace wildforms {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(what + " at position " + std::to_string(pos));
  }
  Integer read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return Integer(text.substr(start, pos - start));
  }
  std::string read_var_token() {
    skip_ws();
    std::size_t start = pos;
    ++pos;  // the letter
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const VariableSet& vars, Ring fallback) {
  Lexer lx{text};
  std::vector<Term> terms;
  std::optional<Ring> ring;
  const int n = vars.count();

  bool first = true;
  while (true) {
    if (lx.done()) {
      if (first) lx.fail("empty input");
      break;
    }
    Rational sign(1);
    char c = lx.peek();
    if (c == '+' || c == '-') {
      ++lx.pos;
      if (c == '-') sign = -1;
    } else if (!first) {
      lx.fail("expected + or -");
    }
    if (lx.done()) lx.fail("dangling sign");
    first = false;

    // One term: *-separated factors.
    Rational coeff = sign;
    Monomial mono(n);
    bool factor_expected = true;
    while (factor_expected) {
      char f = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        Integer num = lx.read_integer();
        if (lx.peek() == '/') {
          ++lx.pos;
          Integer den = lx.read_integer();
          if (is_zero(den)) lx.fail("zero denominator");
          Rational q(num, den);
          q.canonicalize();
          coeff *= q;
        } else {
          coeff *= Rational(num);
        }
      } else if (std::isalpha(static_cast<unsigned char>(f))) {
        std::string token = lx.read_var_token();
        auto hit = vars.lookup(token);
        if (!hit) throw UnknownVariable("'" + token + "'");
        auto [r, idx] = *hit;
        if (ring && *ring != r) lx.fail("mixed primal and dual variables");
        ring = r;
        int exp = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          Integer e = lx.read_integer();
          if (e < 0 || e > 1024) lx.fail("exponent out of range");
          exp = static_cast<int>(e.get_si());
        }
        mono[idx] += exp;
      } else {
        lx.fail("expected factor");
      }
      if (lx.peek() == '*') {
        ++lx.pos;
        if (lx.done()) lx.fail("dangling *");
      } else {
        factor_expected = false;
      }
    }
    terms.push_back({std::move(mono), std::move(coeff)});
  }
  return Polynomial::from_terms(ring.value_or(fallback), n, std::move(terms));
}

Form parse_form(const std::string& text, const VariableSet& vars) {
  return Form(parse_poly(text, vars, Ring::Primal));
}

std::string print_monomial(const Monomial& m, Ring ring, const VariableSet& vars) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << (ring == Ring::Primal ? vars.primal_name(i) : vars.dual_name(i));
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

std::string print_poly(const Polynomial& p, const VariableSet& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool constant_mono = t.mono.degree() == 0;
    if (c != 1 || constant_mono) {
      os << c.get_str();
      if (!constant_mono) os << "*";
    }
    if (!constant_mono) os << print_monomial(t.mono, p.ring(), vars);
  }
  return os.str();
}

}  // namespace wildforms
