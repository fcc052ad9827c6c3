#include "doctest.h"
#include "oracles.hpp"
#include "wildforms/apolar.hpp"
#include "wildforms/families.hpp"
#include "wildforms/parser.hpp"

using namespace wildforms;

namespace {

Polynomial dual(const std::string& text, const VariableSet& vars) {
  return parse_poly(text, vars, Ring::Dual);
}

GradedIdeal ann2_ideal(const Form& f) {
  std::vector<Polynomial> gens = annihilator_component(f, 2);
  return GradedIdeal(VariableSet::standard(f.nvars()), std::move(gens));
}

}  // namespace

TEST_CASE("gd_form shapes") {
  VariableSet v = gd_vars(3);
  CHECK(gd_form(3).poly() == parse_poly("v0*u1^2 + v1*u0*u1 + v2*u0^2", v));
  CHECK_THROWS_AS(gd_form(2), DegreeTooSmall);
  for (int d : {3, 4, 5, 6}) {
    Form g = gd_form(d);
    CHECK(g.nvars() == d + 2);
    CHECK(g.degree() == d);
    CHECK(is_concise(g));
  }
}

TEST_CASE("gd hessians vanish") {
  CHECK(hessian_vanishes(gd_form(3), {.exact = true}).vanishes);
  for (int d : {3, 4}) CHECK(hessian_vanishes(gd_form(d), {.seed = 17}).vanishes);
}

TEST_CASE("fn_form shapes") {
  CHECK(fn_form(4).poly() ==
        parse_poly("x0*x1^2 + x1*x2*x4 + x3*x4^2", VariableSet::standard(5)));
  CHECK(fn_form(7).poly() ==
        parse_poly("x0*x1^2 + x1*x2*x4 + x3*x4^2 + x4*x5*x7 + x6*x7^2",
                   VariableSet::standard(8)));
  CHECK_THROWS_AS(fn_form(6), BadIndex);
  CHECK_THROWS_AS(fn_form(3), BadIndex);
  CHECK(hilbert_function(fn_form(4)).values == std::vector<int>{1, 5, 5, 1});
  CHECK(is_concise(fn_form(7)));
}

TEST_CASE("chain ideal at k = 1") {
  GradedIdeal c1 = chain_ideal(1);
  VariableSet v5 = VariableSet::standard(5);
  GradedIdeal expect(v5, {dual("y0", v5), dual("y2", v5), dual("y3", v5)});
  CHECK(ideal_equal(c1, expect));
}

TEST_CASE("chain ideal is saturated") {
  CHECK(is_saturated(chain_ideal(1)));
  CHECK(is_saturated(chain_ideal(2)));
}

TEST_CASE("saturation of Ann(F_n)_2 is the chain ideal") {
  for (int n : {4, 7}) {
    GradedIdeal sat = saturation(ann2_ideal(fn_form(n)));
    CHECK(ideal_equal(sat, chain_ideal((n - 1) / 3)));
    CHECK(contains_linear_form(sat));
  }
  // F_7's quadric-generated ideal itself is not saturated
  CHECK_FALSE(is_saturated(ann2_ideal(fn_form(7))));
}

TEST_CASE("chain ideal hilbert function grows linearly") {
  GradedIdeal c2 = chain_ideal(2);
  std::vector<int> vals;
  for (int k = 4; k <= 8; ++k) vals.push_back(hf_of_ideal(c2, k));
  for (std::size_t i = 1; i + 1 < vals.size(); ++i)
    CHECK(vals[i + 1] - vals[i] == vals[i] - vals[i - 1]);
  CHECK(vals[1] - vals[0] == 2);  // two lines
}

TEST_CASE("gd decompositions verify with minimal length") {
  for (int d : {3, 4}) {
    BorderDecomposition dec = gd_decomposition(d);
    CHECK(static_cast<int>(dec.summands.size()) == d + 2);
    CHECK(dec.shift == 1);
    CHECK(verify_border_decomposition(dec, gd_form(d)).ok);
    CHECK(rank_lower_bound(gd_form(d)) == d + 2);
  }
}

TEST_CASE("fn decompositions verify with minimal length") {
  for (int n : {4, 7}) {
    BorderDecomposition dec = fn_decomposition(n);
    CHECK(static_cast<int>(dec.summands.size()) == n + 1);
    CHECK(verify_border_decomposition(dec, fn_form(n)).ok);
    CHECK(rank_lower_bound(fn_form(n)) == n + 1);
  }
}

TEST_CASE("wildness of the families") {
  WildnessVerdict g3 = classify_wild(
      gd_form(3), MinimalBorderRankCertificate::verified(gd_decomposition(3)),
      {.seed = 23});
  CHECK(g3.kind == WildnessVerdict::Kind::Wild);
  CHECK(g3.certificate == "verified-decomposition(5)");

  WildnessVerdict f4 = classify_wild(
      fn_form(4), MinimalBorderRankCertificate::verified(fn_decomposition(4)),
      {.seed = 23});
  CHECK(f4.kind == WildnessVerdict::Kind::Wild);
}

TEST_CASE("point configurations") {
  PointConfiguration c1 = fn_point_configuration(1, 1, 1);
  CHECK(c1.points.size() == 5);
  for (const auto& l : c1.relation) CHECK(!is_zero(l));

  PointConfiguration c2 = fn_point_configuration(2, 1, 2);
  CHECK(c2.points.size() == 8);
  for (const auto& l : c2.relation) CHECK(!is_zero(l));

  PointConfiguration c12 = fn_point_configuration(4, 1, 2);
  PointConfiguration c13 = fn_point_configuration(4, 1, 3);
  CHECK(c12.points.size() == 14);
  CHECK(c13.points.size() == 14);
  auto count_on = [](const PointConfiguration& c, int comp) {
    int n = 0;
    for (const auto& p : c.points) n += p.component == comp;
    return n;
  };
  CHECK(count_on(c12, 2) == 4);
  CHECK(count_on(c13, 2) == 3);
  CHECK(count_on(c13, 3) == 4);
  // relation unsupported outside [a,b]
  for (std::size_t j = 0; j < c13.points.size(); ++j) {
    if (c13.points[j].component == 4)
      CHECK(is_zero(c13.relation[j]));
    else
      CHECK(!is_zero(c13.relation[j]));
  }
  CHECK_THROWS_AS(fn_point_configuration(2, 2, 1), BadPair);
  CHECK_THROWS_AS(fn_point_configuration(1, 1, 2), BadPair);
}

TEST_CASE("depth-one pair decomposition for F_13") {
  BorderDecomposition dec = fn_decomposition(13, 1, 3);
  CHECK(static_cast<int>(dec.summands.size()) == 14);
  CHECK(dec.shift == 4);
  CHECK(verify_border_decomposition(dec, fn_form(13)).ok);
  // unreachable pair
  CHECK_THROWS_AS(fn_decomposition(13, 1, 2), BadPair);
}

TEST_CASE("gd vsp ideals") {
  const int d = 3;
  VariableSet v = gd_vars(d);
  Form g = gd_form(d);
  SUBCASE("distinct-root q matches the points oracle") {
    // q = product of 5 distinct linear forms in the dual u-variables;
    // root (alpha : beta) of a factor beta*y_u0 - alpha*y_u1 is the point
    // u = (alpha, beta) on the u-line.
    std::vector<std::pair<int, int>> roots{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}};
    Polynomial q = Polynomial::constant(Ring::Dual, d + 2, Rational(1));
    for (auto [alpha, beta] : roots) {
      Polynomial lin = Polynomial::variable(Ring::Dual, d + 2, d) * Rational(beta) -
                       Polynomial::variable(Ring::Dual, d + 2, d + 1) * Rational(alpha);
      q = q * lin;
    }
    GradedIdeal j = gd_vsp_ideal(d, q);
    for (const auto& gen : j.gens())
      CHECK(apply_dual(gen, g.poly()).is_zero());
    for (int k = 1; k <= d + 3; ++k)
      CHECK(hf_of_ideal(j, k) ==
            std::min<int>(d + 2, static_cast<int>(monomial_basis(d + 2, k).size())));
    std::vector<std::vector<Rational>> pts;
    for (auto [alpha, beta] : roots) {
      std::vector<Rational> p(d + 2, Rational(0));
      p[d] = alpha;
      p[d + 1] = beta;
      pts.push_back(p);
    }
    CHECK(ideal_equal(saturation(j), ideal_of_points(v, pts)));
  }
  SUBCASE("degenerate q gives constant hilbert function five") {
    GradedIdeal j = gd_vsp_ideal(d, dual("y3^5", v));
    for (int k = 3; k <= d + 3; ++k) CHECK(hf_of_ideal(j, k) == 5);
    for (const auto& gen : j.gens())
      CHECK(apply_dual(gen, g.poly()).is_zero());
  }
  SUBCASE("bad q rejected") {
    CHECK_THROWS_AS(gd_vsp_ideal(d, dual("y0^5", v)), BadQ);
    CHECK_THROWS_AS(gd_vsp_ideal(d, dual("y3^4", v)), BadQ);
  }
}

TEST_CASE("limiting scheme of the G_3 decomposition") {
  Form g = gd_form(3);
  BorderDecomposition dec = gd_decomposition(3);
  LimitingSchemeResult res = limiting_scheme_ideal(dec, g);
  CHECK(res.length == 5);
  CHECK(res.length_matches_summands);
  CHECK(res.contained_in_annihilator);
  std::vector<std::vector<Rational>> support;
  for (std::size_t j = 0; j < dec.summands.size(); ++j)
    support.push_back(dec.limit_point(static_cast<int>(j)));
  CHECK(ideal_equal(res.saturated, ideal_of_points(VariableSet::standard(5), support)));
  // the unsaturated ideal has the generic hilbert function of 5 points
  CHECK(res.hf_unsaturated[1] == 5);
  CHECK(res.hf_unsaturated[2] == 5);
}

TEST_CASE("named examples") {
  NamedForm h5 = named_example("H5");
  CHECK(hilbert_function(h5.form).values == std::vector<int>{1, 5, 7, 7, 5, 1});
  NamedForm nw = named_example("NonWildVH");
  CHECK(hessian_vanishes(nw.form, {.seed = 29}).vanishes);
  CHECK(rank_lower_bound(nw.form) == 6);
  NamedForm cusp = named_example("Cusp");
  GradedIdeal ann2 = ann2_ideal(cusp.form);
  CHECK(is_saturated(ann2));
  CHECK(hf_of_ideal(ann2, 5) == 3);  // degree-3 scheme
  NamedForm tg = named_example("ConicTangent");
  GradedIdeal tg2 = ann2_ideal(tg.form);
  CHECK(is_saturated(tg2));
  CHECK(hf_of_ideal(tg2, 5) == 3);
  CHECK(named_example("Perazzo").form == fn_form(4));
  CHECK(named_example("Fermat(2,3)").form.poly() ==
        parse_poly("x0^3 + x1^3 + x2^3", VariableSet::standard(3)));
  CHECK(named_example("G3").form == gd_form(3));
  CHECK_THROWS_AS(named_example("nope"), UnknownName);
}
