#include "wildforms/families.hpp"

#include <algorithm>

#include "wildforms/apolar.hpp"
#include "wildforms/matrix.hpp"
#include "wildforms/parser.hpp"

namespace wildforms {

VariableSet gd_vars(int d) { return VariableSet::with_vu_alias(d); }

Form gd_form(int d) {
  if (d < 3) throw DegreeTooSmall("G_d needs d >= 3");
  const int n = d + 2;
  std::vector<Term> terms;
  for (int i = 0; i < d; ++i) {
    Monomial m(n);
    m[i] = 1;              // v_i
    m[d] = i;              // u_0^i
    m[d + 1] = d - 1 - i;  // u_1^{d-1-i}
    terms.push_back({std::move(m), Rational(1)});
  }
  return Form(Polynomial::from_terms(Ring::Primal, n, std::move(terms)));
}

Form fn_form(int n) {
  if (n < 4 || n % 3 != 1) throw BadIndex("F_n needs n = 3k+1, k >= 1");
  const int k = (n - 1) / 3;
  std::vector<Term> terms;
  {
    Monomial m(n + 1);
    m[0] = 1;
    m[1] = 2;
    terms.push_back({std::move(m), Rational(1)});  // x0 x1^2
  }
  for (int i = 1; i <= k; ++i) {
    Monomial mid(n + 1);
    mid[3 * i - 2] = 1;
    mid[3 * i - 1] = 1;
    mid[3 * i + 1] = 1;
    terms.push_back({std::move(mid), Rational(1)});
    Monomial end(n + 1);
    end[3 * i] = 1;
    end[3 * i + 1] = 2;
    terms.push_back({std::move(end), Rational(1)});
  }
  return Form(Polynomial::from_terms(Ring::Primal, n + 1, std::move(terms)));
}

ChainOfLines chain_of(int n) {
  if (n < 4 || n % 3 != 1) throw BadIndex("chain needs n = 3k+1");
  return ChainOfLines{(n - 1) / 3, n + 1};
}

GradedIdeal chain_ideal(int k) {
  if (k < 1) throw BadIndex("chain_ideal needs k >= 1");
  const int n = 3 * k + 1;
  std::vector<Polynomial> gens;
  for (int h = 0; 3 * h <= n; ++h)
    gens.push_back(Polynomial::variable(Ring::Dual, n + 1, 3 * h));
  for (int h = 0; 3 * h + 2 <= n; ++h)
    gens.push_back(Polynomial::variable(Ring::Dual, n + 1, 3 * h + 2));
  for (int h = 0; 3 * h + 1 <= n; ++h)
    for (int s = 2; 3 * (h + s) + 1 <= n; ++s) {
      Monomial m(n + 1);
      m[3 * h + 1] += 1;
      m[3 * (h + s) + 1] += 1;
      gens.push_back(Polynomial::monomial(Ring::Dual, m));
    }
  return GradedIdeal(VariableSet::standard(n + 1), std::move(gens));
}

GradedIdeal gd_vsp_ideal(int d, const Polynomial& q) {
  if (d < 3) throw DegreeTooSmall("G_d needs d >= 3");
  const int n = d + 2;
  if (q.is_zero() || q.ring() != Ring::Dual || q.nvars() != n)
    throw BadQ("q must be a nonzero dual form in the G_d variables");
  if (!q.is_homogeneous() || q.degree() != d + 2)
    throw BadQ("q must be homogeneous of degree d+2");
  for (const auto& t : q.terms())
    for (int i = 0; i < d; ++i)
      if (t.mono[i] != 0) throw BadQ("q must involve only the dual u-variables");
  Form g = gd_form(d);
  std::vector<Polynomial> gens;
  for (int k = 1; k <= d - 1; ++k)
    for (auto& p : annihilator_component(g, k)) gens.push_back(std::move(p));
  gens.push_back(q);
  return GradedIdeal(gd_vars(d), std::move(gens));
}

namespace {

Polynomial component_point(int nvars, int comp, const Rational& c) {
  Polynomial p = Polynomial::variable(Ring::Primal, nvars, 3 * comp - 2);
  return p + Polynomial::variable(Ring::Primal, nvars, 3 * comp + 1) * c;
}

// Relation among the chosen cubes supported on components a..b: kernel of
// the coefficient matrix, the output of the chain-elimination procedure.
std::vector<Rational> chain_relation(const PointConfiguration& cfg, int d) {
  std::vector<int> involved;
  for (std::size_t j = 0; j < cfg.points.size(); ++j)
    if (cfg.points[j].component >= cfg.a && cfg.points[j].component <= cfg.b)
      involved.push_back(static_cast<int>(j));
  const auto basis = monomial_basis(cfg.nvars, d);
  Matrix<Rational> m(static_cast<int>(involved.size()), static_cast<int>(basis.size()));
  for (std::size_t r = 0; r < involved.size(); ++r)
    m.set_row(static_cast<int>(r),
              coeff_row(cfg.points[involved[r]].linear_form.pow(d), basis));
  auto ker = kernel_basis(m.transposed());
  if (ker.size() != 1)
    throw Error("chain relation space has dimension " + std::to_string(ker.size()));
  std::vector<Rational> relation(cfg.points.size(), Rational(0));
  for (std::size_t r = 0; r < involved.size(); ++r) {
    if (is_zero(ker[0][r]))
      throw Error("chain relation vanishes on a configured point");
    relation[involved[r]] = ker[0][r];
  }
  return relation;
}

}  // namespace

PointConfiguration fn_point_configuration(int k, int a, int b) {
  if (k < 1) throw BadIndex("k >= 1");
  if (k == 1) {
    if (!(a == 1 && b == 1)) throw BadPair("k = 1 admits only (a,b) = (1,1)");
  } else if (!(1 <= a && a < b && b <= k)) {
    throw BadPair("need 1 <= a < b <= k");
  }
  PointConfiguration cfg;
  cfg.k = k;
  cfg.a = a;
  cfg.b = b;
  cfg.nvars = 3 * k + 2;
  for (int comp = 1; comp <= k; ++comp) {
    int count = (k == 1) ? 5 : ((comp == a || comp == b) ? 4 : 3);
    for (int j = 1; j <= count; ++j)
      cfg.points.push_back({comp, component_point(cfg.nvars, comp, Rational(j))});
  }
  cfg.relation = chain_relation(cfg, 3);
  return cfg;
}

namespace {

// Solve sum_j l_j^{d-1} w_j = target for linear forms w_j.
std::vector<Polynomial> solve_power_tangents(const std::vector<Polynomial>& points,
                                             int d, const Polynomial& target) {
  const int n = target.nvars();
  const auto basis = monomial_basis(n, d);
  const int cols = static_cast<int>(points.size()) * n;
  Matrix<Rational> sys(static_cast<int>(basis.size()), cols);
  for (std::size_t j = 0; j < points.size(); ++j) {
    Polynomial power = points[j].pow(static_cast<unsigned>(d - 1));
    for (int v = 0; v < n; ++v) {
      Polynomial col = power * Polynomial::variable(Ring::Primal, n, v);
      std::vector<Rational> cr = coeff_row(col, basis);
      for (std::size_t r = 0; r < basis.size(); ++r)
        sys.at(static_cast<int>(r), static_cast<int>(j) * n + v) = cr[r];
    }
  }
  auto sol = solve(sys, coeff_row(target, basis));
  if (!sol) throw Error("tangent solve: target not in the tangent span");
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < points.size(); ++j) {
    std::vector<Term> terms;
    for (int v = 0; v < n; ++v) {
      const Rational& c = (*sol)[j * n + v];
      if (is_zero(c)) continue;
      Monomial m(n);
      m[v] = 1;
      terms.push_back({std::move(m), c});
    }
    out.push_back(Polynomial::from_terms(Ring::Primal, n, std::move(terms)));
  }
  return out;
}

}  // namespace

BorderDecomposition gd_decomposition(int d) {
  Form g = gd_form(d);
  const int n = d + 2;
  // d+2 distinct points on the line <u_0, u_1>: u_0 + i u_1 and u_1.
  std::vector<Polynomial> points;
  for (int i = 0; i <= d; ++i) {
    Polynomial p = Polynomial::variable(Ring::Primal, n, d);
    points.push_back(p + Polynomial::variable(Ring::Primal, n, d + 1) * Rational(i));
  }
  points.push_back(Polynomial::variable(Ring::Primal, n, d + 1));
  const auto basis = monomial_basis(n, d);
  Matrix<Rational> m(n, static_cast<int>(basis.size()));
  for (int j = 0; j < n; ++j)
    m.set_row(j, coeff_row(points[j].pow(static_cast<unsigned>(d)), basis));
  auto ker = kernel_basis(m.transposed());
  if (ker.size() != 1) throw Error("rational normal curve relation not unique");
  for (const auto& c : ker[0])
    if (is_zero(c)) throw Error("circuit relation with a zero coefficient");
  std::vector<Polynomial> tangents = solve_power_tangents(points, d, g.poly());
  std::vector<Rational> mu(points.size(), Rational(1));
  BorderDecomposition dec =
      construct_tangent_decomposition(points, tangents, ker[0], mu, d);
  VerifyReport rep = verify_border_decomposition(dec, g);
  if (!rep.ok) throw Error("G_d decomposition failed to verify");
  return dec;
}

namespace {

// Configurations with components outside [a,b]: those components' curves
// enter at t-valuation one and the whole decomposition sits at shift two.
BorderDecomposition fn_decomposition_depth_one(int n, const PointConfiguration& cfg,
                                               const Form& f) {
  const int nv = n + 1;
  const int k = cfg.k;
  const auto cubic_basis = monomial_basis(nv, 3);

  struct OutComp {
    int comp;
    int adj;       // adjacent component inside [a,b]
    int junction;  // shared variable
    int outer;     // the other variable of the out component
  };
  std::vector<OutComp> out;
  for (int c = 1; c <= k; ++c) {
    if (c >= cfg.a && c <= cfg.b) continue;
    if (c == cfg.a - 1)
      out.push_back({c, cfg.a, 3 * cfg.a - 2, 3 * c - 2});
    else if (c == cfg.b + 1)
      out.push_back({c, cfg.b, 3 * cfg.b + 1, 3 * c + 1});
    else
      throw BadPair("component " + std::to_string(c) +
                    " is not adjacent to [a,b]; pair out of reach");
  }

  const int npts = static_cast<int>(cfg.points.size());
  std::vector<int> point_out(npts, -1);
  for (int j = 0; j < npts; ++j)
    for (std::size_t o = 0; o < out.size(); ++o)
      if (cfg.points[j].component == out[o].comp) point_out[j] = static_cast<int>(o);

  // Leading weights of the outside curves: their cube combination must be
  // absorbable by adjacent-component tangents, i.e. the coefficients on
  // x_J x_O^2 and x_O^3 vanish.
  std::vector<Rational> weight(npts, Rational(0));
  for (std::size_t o = 0; o < out.size(); ++o) {
    std::vector<int> mine;
    for (int j = 0; j < npts; ++j)
      if (point_out[j] == static_cast<int>(o)) mine.push_back(j);
    Matrix<Rational> cond(2, static_cast<int>(mine.size()));
    Monomial m1(nv), m2(nv);
    m1[out[o].junction] = 1;
    m1[out[o].outer] = 2;
    m2[out[o].outer] = 3;
    for (std::size_t c = 0; c < mine.size(); ++c) {
      Polynomial cube = cfg.points[mine[c]].linear_form.pow(3);
      cond.at(0, static_cast<int>(c)) = cube.coeff_of(m1);
      cond.at(1, static_cast<int>(c)) = cube.coeff_of(m2);
    }
    auto ker = kernel_basis(cond);
    if (ker.size() != 1) throw Error("outside-component weight space not a line");
    for (std::size_t c = 0; c < mine.size(); ++c) {
      if (is_zero(ker[0][c])) throw Error("outside-component weight vanishes");
      weight[mine[c]] = ker[0][c];
    }
  }
  for (int j = 0; j < npts; ++j)
    if (point_out[j] < 0) weight[j] = cfg.relation[j];

  // Order 3: adjacent-component corrections supported on the junction/outer
  // pair cancel the outside cubes. (Summand valuations are multiples of the
  // degree, so the outside cubes first appear at t^3; the inside curves
  // carry their corrections at t^3 and t^4 and the shift is 4.)
  std::vector<std::pair<int, int>> slot_vars;
  for (int j = 0; j < npts; ++j) {
    int comp = cfg.points[j].component;
    for (const auto& o : out)
      if (comp == o.adj) {
        slot_vars.emplace_back(j, o.junction);
        slot_vars.emplace_back(j, o.outer);
      }
  }
  std::vector<Polynomial> first_order(npts, Polynomial(Ring::Primal, nv));
  if (!out.empty()) {
    Matrix<Rational> sys(static_cast<int>(cubic_basis.size()),
                         static_cast<int>(slot_vars.size()));
    for (std::size_t s = 0; s < slot_vars.size(); ++s) {
      auto [j, v] = slot_vars[s];
      Polynomial col = cfg.points[j].linear_form.pow(2) *
                       Polynomial::variable(Ring::Primal, nv, v) *
                       (Rational(3) * weight[j]);
      std::vector<Rational> cr = coeff_row(col, cubic_basis);
      for (std::size_t r = 0; r < cubic_basis.size(); ++r)
        sys.at(static_cast<int>(r), static_cast<int>(s)) = cr[r];
    }
    Polynomial rhs(Ring::Primal, nv);
    for (int j = 0; j < npts; ++j)
      if (point_out[j] >= 0) rhs -= cfg.points[j].linear_form.pow(3) * weight[j];
    auto sol = solve(sys, coeff_row(rhs, cubic_basis));
    if (!sol) throw Error("order-1 cancellation is infeasible");
    for (std::size_t s = 0; s < slot_vars.size(); ++s) {
      auto [j, v] = slot_vars[s];
      if (!is_zero((*sol)[s]))
        first_order[j] += Polynomial::variable(Ring::Primal, nv, v) * (*sol)[s];
    }
  }

  // Order 4: top-order directions on [a,b] curves and tangents on the
  // outside curves produce F. Cross terms of the corrections land at
  // t^6 and beyond, above the shift.
  Polynomial rhs2 = f.poly();
  const int cols2 = npts * nv;
  Matrix<Rational> sys2(static_cast<int>(cubic_basis.size()), cols2);
  for (int j = 0; j < npts; ++j) {
    Polynomial sq = cfg.points[j].linear_form.pow(2) * (Rational(3) * weight[j]);
    for (int v = 0; v < nv; ++v) {
      std::vector<Rational> cr =
          coeff_row(sq * Polynomial::variable(Ring::Primal, nv, v), cubic_basis);
      for (std::size_t r = 0; r < cubic_basis.size(); ++r)
        sys2.at(static_cast<int>(r), j * nv + v) = cr[r];
    }
  }
  auto sol2 = solve(sys2, coeff_row(rhs2, cubic_basis));
  if (!sol2) throw Error("order-2 solve is infeasible");

  BorderDecomposition dec;
  dec.shift = 4;
  dec.degree = 3;
  dec.nvars = nv;
  const std::vector<Rational> zero(nv, Rational(0));
  for (int j = 0; j < npts; ++j) {
    std::vector<Rational> top(nv, Rational(0));
    for (int v = 0; v < nv; ++v) top[v] = (*sol2)[j * nv + v];
    std::vector<Rational> lead(nv, Rational(0)), corr(nv, Rational(0));
    for (const auto& t : cfg.points[j].linear_form.terms())
      for (int v = 0; v < nv; ++v)
        if (t.mono[v] == 1) lead[v] = t.coeff;
    for (const auto& t : first_order[j].terms())
      for (int v = 0; v < nv; ++v)
        if (t.mono[v] == 1) corr[v] = t.coeff;
    if (point_out[j] < 0) {
      // l + t^3 m + t^4 e
      dec.summands.push_back(
          make_summand(weight[j], {lead, zero, zero, corr, top}, nv, 3));
    } else {
      // t (l + t m): cube at t^3, tangent at t^4
      dec.summands.push_back(make_summand(weight[j], {zero, lead, top}, nv, 3));
    }
  }
  VerifyReport rep = verify_border_decomposition(dec, f);
  if (!rep.ok)
    throw Error("F_n depth-one decomposition failed at order " +
                std::to_string(rep.failing_order));
  return dec;
}

}  // namespace

BorderDecomposition fn_decomposition(int n, int a, int b) {
  Form f = fn_form(n);
  const int k = (n - 1) / 3;
  if (a == 0 && b == 0) {
    a = 1;
    b = k == 1 ? 1 : k;
  }
  PointConfiguration cfg = fn_point_configuration(k, a, b);
  if ((a == 1 && b == k) || k == 1) {
    std::vector<Polynomial> points;
    for (const auto& p : cfg.points) points.push_back(p.linear_form);
    std::vector<Polynomial> tangents = solve_power_tangents(points, 3, f.poly());
    std::vector<Rational> mu(points.size(), Rational(1));
    BorderDecomposition dec =
        construct_tangent_decomposition(points, tangents, cfg.relation, mu, 3);
    VerifyReport rep = verify_border_decomposition(dec, f);
    if (!rep.ok) throw Error("F_n decomposition failed to verify");
    return dec;
  }
  return fn_decomposition_depth_one(n, cfg, f);
}

namespace {

NamedForm make_named(const std::string& name, VariableSet vars, const std::string& text) {
  Form f = parse_form(text, vars);
  return NamedForm{name, std::move(vars), std::move(f)};
}

}  // namespace

NamedForm named_example(const std::string& name) {
  if (name == "H5")
    return make_named(name, VariableSet::with_vu_alias(3),
                      "v0*u0^4 + v1*u0^2*u1^2 + v2*u1^4");
  if (name == "Ikeda")
    return make_named(name, VariableSet::with_vu_alias(2),
                      "v0*u0^3*u1 + v1*u0*u1^3 + v0^3*v1^2");
  if (name == "L5")
    return make_named(name, VariableSet::with_vu_alias(2), "v0*u0^3*u1 + v1*u0*u1^3");
  if (name == "NonMinimal4")
    return make_named(name, VariableSet::with_vu_alias(3),
                      "v0*u0^3 + v1*u0^2*u1 + v2*u0*u1^2");
  if (name == "NonWildVH")
    return make_named(name, VariableSet::with_vu_alias(3),
                      "v0*u0^3 + v1*u1^3 + v2*u0^3 + 3*v2*u0^2*u1 + "
                      "3*v2*u0*u1^2 + v2*u1^3");
  if (name == "Jet") return make_named(name, VariableSet::standard(2), "x0^2*x1");
  if (name == "ConicTangent")
    return make_named(name, VariableSet::standard(3), "x1*x0^2 + x1^2*x2");
  if (name == "Cusp")
    return make_named(name, VariableSet::standard(3), "x1^2*x2 - x0^3");
  if (name == "Perazzo")
    return NamedForm{name, VariableSet::standard(5), fn_form(4)};
  if (name.rfind("Fermat(", 0) == 0 && name.back() == ')') {
    std::string body = name.substr(7, name.size() - 8);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw UnknownName(name);
    int n = std::stoi(body.substr(0, comma));
    int d = std::stoi(body.substr(comma + 1));
    if (n < 0 || d < 1) throw UnknownName(name);
    std::vector<Term> terms;
    for (int i = 0; i <= n; ++i) {
      Monomial m(n + 1);
      m[i] = d;
      terms.push_back({std::move(m), Rational(1)});
    }
    return NamedForm{name, VariableSet::standard(n + 1),
                     Form(Polynomial::from_terms(Ring::Primal, n + 1, std::move(terms)))};
  }
  try {
    if (name.size() > 1 && name[0] == 'G') {
      int d = std::stoi(name.substr(1));
      return NamedForm{name, gd_vars(d), gd_form(d)};
    }
    if (name.size() > 1 && name[0] == 'F') {
      int n = std::stoi(name.substr(1));
      return NamedForm{name, VariableSet::standard(n + 1), fn_form(n)};
    }
  } catch (const Error&) {
    throw UnknownName(name);
  } catch (const std::exception&) {
    throw UnknownName(name);
  }
  throw UnknownName(name);
}

std::vector<std::string> named_example_catalog() {
  return {"H5",   "Ikeda", "L5",   "NonMinimal4", "NonWildVH",  "Jet",
          "ConicTangent", "Cusp", "Perazzo",     "Fermat(n,d)", "G<d>", "F<n>"};
}

}  // namespace wildforms
