#include "wildforms/borderdec.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "wildforms/matrix.hpp"

namespace wildforms {

namespace {

// Summand linear form as a polynomial in n+1 variables with t appended as
// the last variable.
Polynomial summand_poly(const WeightedSummand& s, int nvars) {
  std::vector<Term> terms;
  for (int i = 0; i < nvars; ++i) {
    const IntPoly& c = s.coeffs[i];
    for (int k = 0; k <= c.degree(); ++k) {
      if (is_zero(c.coeff(k))) continue;
      Monomial m(nvars + 1);
      m[i] = 1;
      m[nvars] = k;
      terms.push_back({std::move(m), Rational(c.coeff(k))});
    }
  }
  return Polynomial::from_terms(Ring::Primal, nvars + 1, std::move(terms));
}

Polynomial drop_t(const Polynomial& p, int nvars) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) m[i] = t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(Ring::Primal, nvars, std::move(terms));
}

IntPoly strip_t_power(const IntPoly& p, int v) {
  if (p.is_zero() || v == 0) return p;
  std::vector<Integer> c(p.coeffs().begin() + v, p.coeffs().end());
  return IntPoly(std::move(c));
}

}  // namespace

std::vector<Rational> BorderDecomposition::limit_point(int j) const {
  const WeightedSummand& s = summands[j];
  int v = -1;
  for (const auto& c : s.coeffs) {
    if (c.is_zero()) continue;
    int cv = c.valuation();
    if (v < 0 || cv < v) v = cv;
  }
  if (v < 0) throw Error("zero summand");
  std::vector<Rational> out(nvars, Rational(0));
  for (int i = 0; i < nvars; ++i) out[i] = Rational(s.coeffs[i].coeff(v));
  return out;
}

VerifyReport verify_border_decomposition(const BorderDecomposition& d, const Form& f) {
  if (d.nvars != f.nvars() || d.degree != f.degree())
    throw RingMismatch("decomposition does not match the form");
  const int n = d.nvars;
  Polynomial total(Ring::Primal, n + 1);
  for (const auto& s : d.summands) {
    if (static_cast<int>(s.coeffs.size()) != n) throw FormatError("bad summand width");
    total += summand_poly(s, n).pow(static_cast<unsigned>(d.degree)) * s.weight;
  }
  // Split by t-order.
  std::map<int, std::vector<Term>> by_order;
  for (const auto& t : total.terms()) by_order[t.mono[n]].push_back(t);
  VerifyReport rep;
  for (int k = 0; k <= d.shift; ++k) {
    Polynomial coeff(Ring::Primal, n);
    auto it = by_order.find(k);
    if (it != by_order.end())
      coeff = drop_t(Polynomial::from_terms(Ring::Primal, n + 1, it->second), n);
    if (k < d.shift) {
      if (!coeff.is_zero()) {
        rep.ok = false;
        rep.failing_order = k;
        rep.residual = coeff;
        return rep;
      }
    } else {
      Polynomial diff = coeff - f.poly();
      if (!diff.is_zero()) {
        rep.ok = false;
        rep.failing_order = k;
        rep.residual = diff;
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

namespace {

// Multiply a rational-coefficient linear form description into an integer
// one, folding the scale into the weight.
WeightedSummand integerize(const Rational& weight,
                           const std::vector<std::vector<Rational>>& coeffs_by_power,
                           int nvars, int degree) {
  Integer den_lcm(1);
  for (const auto& level : coeffs_by_power)
    for (const auto& c : level)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  WeightedSummand out;
  out.coeffs.assign(nvars, IntPoly());
  for (int i = 0; i < nvars; ++i) {
    std::vector<Integer> poly(coeffs_by_power.size(), Integer(0));
    for (std::size_t k = 0; k < coeffs_by_power.size(); ++k) {
      Rational scaled = coeffs_by_power[k][i] * Rational(den_lcm);
      poly[k] = scaled.get_num();
    }
    out.coeffs[i] = IntPoly(std::move(poly));
  }
  Rational scale(1);
  Rational dl(den_lcm);
  for (int k = 0; k < degree; ++k) scale *= dl;
  out.weight = weight / scale;
  return out;
}

std::vector<Rational> linear_coeffs(const Polynomial& p, int nvars) {
  std::vector<Rational> out(nvars, Rational(0));
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != 1) throw Error("expected a linear form");
    for (int i = 0; i < nvars; ++i)
      if (t.mono[i] == 1) out[i] = t.coeff;
  }
  return out;
}

}  // namespace

WeightedSummand make_summand(const Rational& weight,
                             const std::vector<std::vector<Rational>>& coeffs_by_power,
                             int nvars, int degree) {
  return integerize(weight, coeffs_by_power, nvars, degree);
}

BorderDecomposition construct_tangent_decomposition(const std::vector<Polynomial>& points,
                                                    const std::vector<Polynomial>& tangents,
                                                    const std::vector<Rational>& lambda,
                                                    const std::vector<Rational>& mu,
                                                    int degree) {
  const std::size_t r = points.size();
  if (tangents.size() != r || lambda.size() != r || mu.size() != r)
    throw Error("construct_tangent_decomposition: length mismatch");
  if (r == 0) throw Error("no points");
  const int n = points[0].nvars();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Matrix<Rational> two(2, n);
      two.set_row(0, linear_coeffs(points[i], n));
      two.set_row(1, linear_coeffs(points[j], n));
      if (rank(two) < 2)
        throw DuplicatePoint("summand points " + std::to_string(i) + " and " +
                             std::to_string(j) + " coincide");
    }
  Polynomial relation(Ring::Primal, n);
  for (std::size_t i = 0; i < r; ++i)
    relation += points[i].pow(static_cast<unsigned>(degree)) * lambda[i];
  if (!relation.is_zero())
    throw RelationNotSatisfied("sum of lambda_i l_i^d is nonzero");
  BorderDecomposition out;
  out.shift = 1;
  out.degree = degree;
  out.nvars = n;
  for (std::size_t i = 0; i < r; ++i) {
    if (is_zero(lambda[i]))
      throw ZeroLambda("lambda[" + std::to_string(i) + "] = 0");
    Rational c = mu[i] / (Rational(degree) * lambda[i]);
    std::vector<std::vector<Rational>> levels;
    levels.push_back(linear_coeffs(points[i], n));
    std::vector<Rational> tang = linear_coeffs(tangents[i], n);
    for (auto& x : tang) x *= c;
    levels.push_back(std::move(tang));
    out.summands.push_back(integerize(lambda[i], levels, n, degree));
  }
  return out;
}

LimitIdealFamily limit_ideal_family(const VariableSet& vars,
                                    const std::vector<std::vector<IntPoly>>& moving_points,
                                    int degree_bound) {
  const int n = vars.count();
  const int r = static_cast<int>(moving_points.size());
  if (r == 0) throw Error("limit_ideal_family: no points");
  // Projective normalization: strip the common t-power per point.
  std::vector<std::vector<IntPoly>> pts = moving_points;
  for (auto& p : pts) {
    if (static_cast<int>(p.size()) != n) throw Error("bad point width");
    int v = -1;
    for (const auto& c : p) {
      if (c.is_zero()) continue;
      int cv = c.valuation();
      if (v < 0 || cv < v) v = cv;
    }
    if (v < 0) throw Error("zero point");
    for (auto& c : p) c = strip_t_power(c, v);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Matrix<RatFunc> two(2, n);
      for (int c = 0; c < n; ++c) {
        two.at(0, c) = RatFunc(pts[i][c], IntPoly(Integer(1)));
        two.at(1, c) = RatFunc(pts[j][c], IntPoly(Integer(1)));
      }
      if (rank(two) < 2)
        throw PointCollision("points " + std::to_string(i) + " and " +
                             std::to_string(j) + " coincide for generic t");
    }

  LimitIdealFamily fam;
  fam.chain.nvars = n;
  fam.chain.max_degree = degree_bound;
  fam.chain.spans.resize(degree_bound + 1);
  for (int k = 0; k <= degree_bound; ++k) {
    const auto basis = monomial_basis(n, k);
    Matrix<RatFunc> e(r, static_cast<int>(basis.size()));
    for (int i = 0; i < r; ++i)
      for (std::size_t m = 0; m < basis.size(); ++m) {
        IntPoly v(Integer(1));
        for (int var = 0; var < n; ++var)
          for (int rep = 0; rep < basis[m][var]; ++rep) v = v * pts[i][var];
        e.at(i, static_cast<int>(m)) = RatFunc(std::move(v), IntPoly(Integer(1)));
      }
    fam.chain.spans[k] = limit_subspace(e);
    fam.hf.push_back(fam.chain.spans[k].rows());
  }
  fam.ideal = GradedIdeal(vars, minimal_generators_from_chain(fam.chain));
  return fam;
}

LimitingSchemeResult limiting_scheme_ideal(const BorderDecomposition& d, const Form& f,
                                           std::optional<int> degree_bound) {
  const int r = static_cast<int>(d.summands.size());
  const int bound = degree_bound.value_or(r + 1);
  std::vector<std::vector<IntPoly>> pts;
  for (const auto& s : d.summands) pts.push_back(s.coeffs);
  VariableSet vars = VariableSet::standard(d.nvars);
  LimitIdealFamily fam = limit_ideal_family(vars, pts, bound);

  LimitingSchemeResult out;
  out.unsaturated = fam.ideal;
  out.hf_unsaturated = fam.hf;
  out.saturated = saturation(fam.ideal);
  out.length = hf_of_ideal(out.saturated, bound);
  out.length_matches_summands =
      out.length == r && hf_of_ideal(out.saturated, bound - 1) == out.length;
  out.contained_in_annihilator = true;
  for (const auto& g : fam.ideal.gens())
    if (!apply_dual(g, f.poly()).is_zero()) out.contained_in_annihilator = false;
  for (int j = 0; j < r; ++j) {
    std::vector<Rational> p = d.limit_point(j);
    bool seen = false;
    for (const auto& q : out.support) {
      Matrix<Rational> two(2, d.nvars);
      two.set_row(0, p);
      two.set_row(1, q);
      if (rank(two) < 2) seen = true;
    }
    if (!seen) out.support.push_back(std::move(p));
  }
  return out;
}

std::string decomposition_to_json(const BorderDecomposition& d) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "border-decomposition";
  j["s"] = d.shift;
  j["d"] = d.degree;
  j["nvars"] = d.nvars;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : d.summands) {
    nlohmann::json one;
    one["weight"] = to_string(s.weight);
    nlohmann::json form;
    for (int i = 0; i < d.nvars; ++i) {
      if (s.coeffs[i].is_zero()) continue;
      nlohmann::json coeffs = nlohmann::json::array();
      for (int k = 0; k <= s.coeffs[i].degree(); ++k)
        coeffs.push_back(to_string(s.coeffs[i].coeff(k)));
      form["x" + std::to_string(i)] = coeffs;
    }
    one["form"] = form;
    arr.push_back(one);
  }
  j["summands"] = arr;
  return j.dump(2);
}

BorderDecomposition decomposition_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("json parse: ") + e.what());
  }
  BorderDecomposition d;
  try {
    d.shift = j.at("s").get<int>();
    d.degree = j.at("d").get<int>();
    d.nvars = j.at("nvars").get<int>();
    for (const auto& one : j.at("summands")) {
      WeightedSummand s;
      s.weight = rational_from_string(one.at("weight").get<std::string>());
      s.coeffs.assign(d.nvars, IntPoly());
      for (const auto& [key, coeffs] : one.at("form").items()) {
        if (key.empty() || key[0] != 'x') throw FormatError("bad variable " + key);
        int idx = std::stoi(key.substr(1));
        if (idx < 0 || idx >= d.nvars) throw FormatError("variable out of range " + key);
        std::vector<Integer> c;
        for (const auto& v : coeffs) c.emplace_back(v.get<std::string>());
        s.coeffs[idx] = IntPoly(std::move(c));
      }
      d.summands.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("decomposition json: ") + e.what());
  }
  if (d.shift < 0 || d.degree < 1 || d.nvars < 1 || d.summands.empty())
    throw FormatError("decomposition json: bad header fields");
  return d;
}

}  // namespace wildforms
