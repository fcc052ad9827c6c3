#include "doctest.h"
#include "oracles.hpp"
#include "wildforms/apolar.hpp"
#include "wildforms/groebner.hpp"
#include "wildforms/parser.hpp"

using namespace wildforms;

namespace {

Polynomial dual(const std::string& text, const VariableSet& vars) {
  return parse_poly(text, vars, Ring::Dual);
}

GradedIdeal ideal(const std::vector<std::string>& gens, const VariableSet& vars) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(dual(g, vars));
  return GradedIdeal(vars, ps);
}

// Independent check of the Buchberger criterion: every S-polynomial of the
// emitted basis reduces to zero against it.
bool all_s_pairs_reduce(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      const Polynomial &f = gb.elements[i], &g = gb.elements[j];
      int fi = f.leading_index(gb.order), gi = g.leading_index(gb.order);
      const Term &lf = f.terms()[fi], &lg = g.terms()[gi];
      Monomial lcm = lf.mono.lcm_with(lg.mono);
      Polynomial s =
          f * Polynomial::monomial(f.ring(), lcm.quotient_by(lf.mono),
                                   Rational(1) / lf.coeff) -
          g * Polynomial::monomial(g.ring(), lcm.quotient_by(lg.mono),
                                   Rational(1) / lg.coeff);
      if (!normal_form(s, gb).is_zero()) return false;
    }
  return true;
}

const VariableSet V2 = VariableSet::standard(2);
const VariableSet V3 = VariableSet::standard(3);

}  // namespace

TEST_CASE("principal ideal basis") {
  GradedIdeal i = ideal({"y0"}, V2);
  const GroebnerBasis& gb = i.basis();
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == dual("y0", V2));
}

TEST_CASE("fermat cubic annihilator basis matches its hilbert function") {
  GradedIdeal ann = ideal({"y0*y1", "y0^3 - y1^3"}, V2);
  CHECK(all_s_pairs_reduce(ann.basis()));
  CHECK(hf_of_ideal(ann, 0) == 1);
  CHECK(hf_of_ideal(ann, 1) == 2);
  CHECK(hf_of_ideal(ann, 2) == 2);
  CHECK(hf_of_ideal(ann, 3) == 1);
  CHECK(hf_of_ideal(ann, 4) == 0);
}

TEST_CASE("monomial pair already a basis") {
  GradedIdeal i = ideal({"y1^2", "y0*y1"}, V2);
  const GroebnerBasis& gb = i.basis();
  CHECK(gb.elements.size() == 2);
  CHECK(all_s_pairs_reduce(gb));
}

TEST_CASE("emitted bases satisfy the buchberger criterion") {
  Rng rng(211);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    int count = 2 + static_cast<int>(rng.next_below(2));
    for (int i = 0; i < count; ++i)
      gens.push_back(oracle::random_homogeneous(
          rng, Ring::Dual, 3, 2 + static_cast<int>(rng.next_below(2)), 3));
    GradedIdeal i(V3, gens);
    CHECK(all_s_pairs_reduce(i.basis()));
    CHECK(all_s_pairs_reduce(i.basis(MonomialOrder::lex())));
  }
}

TEST_CASE("normal form properties") {
  GradedIdeal ann = ideal({"y0*y1", "y0^3 - y1^3"}, V2);
  const GroebnerBasis& gb = ann.basis();
  Polynomial member = dual("y0*y1", V2) * dual("y0^2 + 3*y1", V2) +
                      dual("y0^3 - y1^3", V2) * dual("y1", V2);
  CHECK(normal_form(member, gb).is_zero());
  Polynomial f = dual("y0^2 + y0*y1", V2);
  Polynomial nf = normal_form(f, gb);
  CHECK(normal_form(nf, gb) == nf);
  CHECK(normal_form(dual("y0^2", V2), gb) == dual("y0^2", V2));
}

TEST_CASE("hf of the zero and irrelevant ideals") {
  GradedIdeal zero(V3, {});
  CHECK(hf_of_ideal(zero, 2) == 6);
  CHECK(hf_of_ideal(zero, 3) == 10);
  GradedIdeal one(V3, {dual("y0", V3), dual("y1", V3), dual("y2", V3)});
  CHECK(hf_of_ideal(one, 1) == 0);
  CHECK(hf_of_ideal(one, 5) == 0);
}

TEST_CASE("hf of the truncated G_d annihilator") {
  // Ann(G_d) cut at degree d-1 has HF d+2, d+2, d+3 in degrees d, d+1, d+2.
  for (int d : {3, 4}) {
    VariableSet vs = VariableSet::with_vu_alias(d);
    std::string text;
    for (int i = 0; i < d; ++i) {
      if (i) text += " + ";
      text += "v" + std::to_string(i) + "*u0^" + std::to_string(i) + "*u1^" +
              std::to_string(d - 1 - i);
    }
    Form g = parse_form(text, vs);
    std::vector<Polynomial> gens;
    for (int k = 1; k <= d - 1; ++k)
      for (const auto& p : annihilator_component(g, k)) gens.push_back(p);
    GradedIdeal trunc(vs, gens);
    CHECK(hf_of_ideal(trunc, d) == d + 2);
    CHECK(hf_of_ideal(trunc, d + 1) == d + 2);
    CHECK(hf_of_ideal(trunc, d + 2) == d + 3);
  }
}

TEST_CASE("annihilator ideal hf matches the catalecticant table") {
  Rng rng(223);
  for (int trial = 0; trial < 6; ++trial) {
    Form f{oracle::random_homogeneous(rng, Ring::Primal, 3, 3, 5)};
    GradedIdeal ann = annihilator_generators(f);
    HilbertFunctionTable table = hilbert_function(f);
    for (int k = 0; k <= f.degree(); ++k)
      CHECK(hf_of_ideal(ann, k) == table.values[k]);
    CHECK(hf_of_ideal(ann, f.degree() + 1) == 0);
  }
}

TEST_CASE("saturate_by a variable") {
  GradedIdeal i = ideal({"y0*y1"}, V2);
  GradedIdeal sat = saturate_by(i, dual("y1", V2));
  CHECK(ideal_equal(sat, ideal({"y0"}, V2)));
  for (const auto& g : i.gens()) CHECK(sat.contains(g));
}

TEST_CASE("iterated colon stabilizes to the saturation") {
  GradedIdeal i = ideal({"y0*y1^2", "y0^2*y2"}, V3);
  Polynomial f = dual("y0", V3);
  GradedIdeal expect = saturate_by(i, f);
  GradedIdeal current = i;
  for (int step = 0; step < 6; ++step) {
    GradedIdeal next = colon_ideal(current, f);
    if (ideal_equal(next, current)) break;
    current = next;
  }
  CHECK(ideal_equal(current, expect));
}

TEST_CASE("saturation of the truncated H5 annihilator") {
  VariableSet vs = VariableSet::with_vu_alias(3);
  Form h5 = parse_form("v0*u0^4 + v1*u0^2*u1^2 + v2*u1^4", vs);
  std::vector<Polynomial> gens;
  for (int k = 1; k <= 3; ++k)
    for (const auto& p : annihilator_component(h5, k)) gens.push_back(p);
  GradedIdeal trunc(vs, gens);
  GradedIdeal sat = saturation(trunc);
  GradedIdeal coords = ideal({"y0", "y1", "y2"}, vs);
  CHECK(ideal_equal(sat, coords));
  CHECK(contains_linear_form(sat));
  CHECK_FALSE(contains_linear_form(trunc));
}

TEST_CASE("saturated ideals are fixed points") {
  GradedIdeal jet = ideal({"y1^2"}, V2);
  CHECK(is_saturated(jet));
  GradedIdeal pts = ideal_of_points(V3, {{Rational(1), Rational(0), Rational(0)},
                                         {Rational(0), Rational(1), Rational(0)},
                                         {Rational(0), Rational(0), Rational(1)}});
  CHECK(is_saturated(pts));
  GradedIdeal sat = saturation(pts);
  CHECK(ideal_equal(sat, pts));
}

TEST_CASE("ideal of two coordinate points in the plane") {
  GradedIdeal pts = ideal_of_points(V3, {{Rational(1), Rational(0), Rational(0)},
                                         {Rational(0), Rational(1), Rational(0)}});
  CHECK(ideal_equal(pts, ideal({"y2", "y0*y1"}, V3)));
}

TEST_CASE("ideal of the coordinate simplex") {
  std::vector<std::vector<Rational>> simplex;
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> p(3, Rational(0));
    p[i] = 1;
    simplex.push_back(p);
  }
  GradedIdeal pts = ideal_of_points(V3, simplex);
  GradedIdeal expect = ideal({"y0*y1", "y0*y2", "y1*y2"}, V3);
  CHECK(ideal_equal(pts, expect));
}

TEST_CASE("ideal_of_points rejects duplicates and has generic hf") {
  CHECK_THROWS_AS(ideal_of_points(V3, {{Rational(1), Rational(2), Rational(0)},
                                       {Rational(2), Rational(4), Rational(0)}}),
                  DuplicatePoint);
  Rng rng(227);
  std::vector<std::vector<Rational>> pts;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> p(3);
    for (auto& c : p) c = rng.next_rational(5);
    pts.push_back(p);
  }
  GradedIdeal i = ideal_of_points(V3, pts);
  for (int k = 0; k <= 5; ++k)
    CHECK(hf_of_ideal(i, k) ==
          std::min<int>(4, static_cast<int>(monomial_basis(3, k).size())));
  for (const auto& g : i.gens())
    for (const auto& p : pts) CHECK(is_zero(g.eval(p)));
}

TEST_CASE("contains_linear_form basics") {
  CHECK(contains_linear_form(ideal({"y0"}, V3)));
  CHECK(contains_linear_form(ideal({"y0 + 2*y1", "y1^2"}, V3)));
  CHECK_FALSE(contains_linear_form(ideal({"y0^2"}, V3)));
  CHECK_FALSE(contains_linear_form(ideal({"y0*y1", "y0*y2", "y1*y2"}, V3)));
}
