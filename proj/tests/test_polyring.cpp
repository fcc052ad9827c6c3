#include "doctest.h"
#include "oracles.hpp"
#include "wildforms/parser.hpp"
#include "wildforms/polynomial.hpp"

using namespace wildforms;

namespace {
const VariableSet V5 = VariableSet::standard(5);
const VariableSet V2 = VariableSet::standard(2);
}  // namespace

TEST_CASE("parse a monomial") {
  Polynomial p = parse_poly("x0^2*x1", V2);
  REQUIRE(p.term_count() == 1);
  CHECK(p.terms()[0].mono == Monomial(std::vector<int>{2, 1}));
  CHECK(p.terms()[0].coeff == Rational(1));
  CHECK(p.ring() == Ring::Primal);
}

TEST_CASE("parse the Perazzo cubic") {
  Polynomial p = parse_poly("x0*x1^2 + x1*x2*x4 + x3*x4^2", V5);
  CHECK(p.term_count() == 3);
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 3);
  CHECK(p.coeff_of(Monomial(std::vector<int>{0, 1, 1, 0, 1})) == Rational(1));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_poly("x0^2 +", V2), SyntaxError);
  CHECK_THROWS_AS(parse_poly("", V2), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x0 * * x1", V2), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x7", V2), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("x0 + y0", V2), SyntaxError);
}

TEST_CASE("parse coefficients and signs") {
  Polynomial p = parse_poly("-3/2*x0^2 + x0*x1 - 5", V2);
  CHECK(p.coeff_of(Monomial(std::vector<int>{2, 0})) == Rational(-3, 2));
  CHECK(p.coeff_of(Monomial(std::vector<int>{1, 1})) == Rational(1));
  CHECK(p.coeff_of(Monomial(std::vector<int>{0, 0})) == Rational(-5));
}

TEST_CASE("vu aliases map onto the canonical layout") {
  VariableSet vs = VariableSet::with_vu_alias(3);
  Polynomial h5 = parse_poly("v0*u0^4 + v1*u0^2*u1^2 + v2*u1^4", vs);
  CHECK(h5.degree() == 5);
  CHECK(h5.coeff_of(Monomial(std::vector<int>{1, 0, 0, 4, 0})) == Rational(1));
  CHECK(h5.coeff_of(Monomial(std::vector<int>{0, 1, 0, 2, 2})) == Rational(1));
  // x-names address the same slots
  CHECK(parse_poly("x0*x3^4", vs) == parse_poly("v0*u0^4", vs));
  CHECK(print_poly(h5, vs) == "v0*u0^4 + v1*u0^2*u1^2 + v2*u1^4");
}

TEST_CASE("apply_dual single differentiation") {
  Polynomial f = parse_poly("x0^2", V2);
  Polynomial y0 = Polynomial::variable(Ring::Dual, 2, 0);
  CHECK(apply_dual(y0, f) == parse_poly("2*x0", V2));
}

TEST_CASE("apply_dual annihilation and mixed derivative") {
  Polynomial f = parse_poly("x0^2*x1", V2);
  Polynomial y1sq = parse_poly("y1^2", V2, Ring::Dual);
  CHECK(apply_dual(y1sq, f).is_zero());
  Polynomial y0y1 = parse_poly("y0*y1", V2);
  CHECK(apply_dual(y0y1, f) == parse_poly("2*x0", V2));
}

TEST_CASE("apply_dual ring checks") {
  Polynomial f = parse_poly("x0^2", V2);
  CHECK_THROWS_AS(apply_dual(f, f), RingMismatch);
}

TEST_CASE("monomial_basis counts") {
  CHECK(monomial_basis(2, 2).size() == 3);
  CHECK(monomial_basis(5, 1).size() == 5);
  CHECK(monomial_basis(3, 3).size() == 10);
  CHECK(monomial_basis(3, 0).size() == 1);
  auto restricted = monomial_basis(5, 2, std::vector<int>{3, 4});
  CHECK(restricted.size() == 3);
}

TEST_CASE("apply_dual is bilinear") {
  Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial h1 = oracle::random_poly(rng, Ring::Dual, 3, 2, 3);
    Polynomial h2 = oracle::random_poly(rng, Ring::Dual, 3, 2, 3);
    Polynomial f1 = oracle::random_poly(rng, Ring::Primal, 3, 4, 4);
    Polynomial f2 = oracle::random_poly(rng, Ring::Primal, 3, 4, 4);
    Rational a = rng.next_rational(4), b = rng.next_rational(4);
    CHECK(apply_dual(h1 * a + h2 * b, f1) ==
          apply_dual(h1, f1) * a + apply_dual(h2, f1) * b);
    CHECK(apply_dual(h1, f1 * a + f2 * b) ==
          apply_dual(h1, f1) * a + apply_dual(h1, f2) * b);
  }
}

TEST_CASE("composition law for the dual action") {
  Rng rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial g = oracle::random_poly(rng, Ring::Dual, 3, 2, 3);
    Polynomial h = oracle::random_poly(rng, Ring::Dual, 3, 2, 3);
    Polynomial f = oracle::random_poly(rng, Ring::Primal, 3, 5, 5);
    Polynomial lhs = apply_dual(g * h, f);
    CHECK(lhs == apply_dual(g, apply_dual(h, f)));
    CHECK(lhs == apply_dual(h, apply_dual(g, f)));
  }
}

TEST_CASE("degree bookkeeping under the dual action") {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    int dh = 1 + static_cast<int>(rng.next_below(3));
    int df = 1 + static_cast<int>(rng.next_below(4));
    Polynomial h = oracle::random_homogeneous(rng, Ring::Dual, 3, dh, 4);
    Polynomial f = oracle::random_homogeneous(rng, Ring::Primal, 3, df, 4);
    Polynomial out = apply_dual(h, f);
    if (dh > df) {
      CHECK(out.is_zero());
    } else if (!out.is_zero()) {
      CHECK(out.degree() == df - dh);
      CHECK(out.is_homogeneous());
    }
  }
}

TEST_CASE("parse of print is the identity") {
  Rng rng(109);
  const VariableSet v3 = VariableSet::standard(3);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = oracle::random_poly(rng, trial % 2 ? Ring::Primal : Ring::Dual, 3, 4, 6);
    CHECK(parse_poly(print_poly(p, v3), v3, p.ring()) == p);
  }
}

TEST_CASE("printing is canonical grevlex") {
  Polynomial p = parse_poly("x1 + x0^2 - 2*x0*x1", V2);
  CHECK(print_poly(p, V2) == "x0^2 - 2*x0*x1 + x1");
}

TEST_CASE("form validation") {
  CHECK_THROWS(Form(parse_poly("x0^2 + x1", V2)));
  CHECK_THROWS(Form(parse_poly("y0^2", V2, Ring::Dual)));
  Form f(parse_poly("x0^2*x1", V2));
  CHECK(f.degree() == 3);
  CHECK(f.nvars() == 2);
}

TEST_CASE("polynomial evaluation and derivatives") {
  Polynomial p = parse_poly("x0^2*x1 - 3*x1^2", V2);
  std::vector<Rational> pt{Rational(2), Rational(-1)};
  CHECK(p.eval(pt) == Rational(-7));
  CHECK(p.derivative(0) == parse_poly("2*x0*x1", V2));
  CHECK(p.derivative(1) == parse_poly("x0^2 - 6*x1", V2));
}
