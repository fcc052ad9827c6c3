#include "wildforms/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wildforms {

namespace {

using Terms = std::vector<Term>;  // sorted descending under the active order

struct TermCmp {
  MonomialOrder order;
  bool operator()(const Term& a, const Term& b) const {
    return compare(a.mono, b.mono, order) > 0;
  }
};

Terms to_working(const Polynomial& p, const MonomialOrder& order) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(), TermCmp{order});
  return t;
}

Polynomial from_working(Ring ring, int nvars, Terms t) {
  return Polynomial::from_terms(ring, nvars, std::move(t));
}

// f - c * m * g, both sorted; linear merge.
Terms subtract_multiple(const Terms& f, const Rational& c, const Monomial& m,
                        const Terms& g, const MonomialOrder& order) {
  Terms out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == f.size()) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
      continue;
    }
    int cmp = compare(f[i].mono, gm, order);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].coeff)});
      ++j;
    } else {
      Rational nc = f[i].coeff - c * g[j].coeff;
      if (!is_zero(nc)) out.push_back({f[i].mono, nc});
      ++i;
      ++j;
    }
  }
  return out;
}

void scale_primitive(Terms& t) {
  if (t.empty()) return;
  Integer num_gcd(0), den_lcm(1);
  for (const auto& x : t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.coeff.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(t.front().coeff) < 0) scale = -scale;
  for (auto& x : t) x.coeff *= scale;
}

struct Engine {
  MonomialOrder order;
  std::vector<Terms> basis;
  std::vector<bool> alive;

  // Full reduction against the current basis.
  Terms reduce(Terms f) const {
    Terms out;
    while (!f.empty()) {
      bool reduced = false;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!alive[b] || basis[b].empty()) continue;
        const Term& lt = basis[b].front();
        if (!lt.mono.divides(f.front().mono)) continue;
        Rational c = f.front().coeff / lt.coeff;
        Monomial m = f.front().mono.quotient_by(lt.mono);
        f = subtract_multiple(f, c, m, basis[b], order);
        reduced = true;
        break;
      }
      if (!reduced) {
        out.push_back(f.front());
        f.erase(f.begin());
      }
    }
    return out;
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::optional<int> degree_bound) {
  Ring ring = Ring::Dual;
  int nvars = 0;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      ring = g.ring();
      nvars = g.nvars();
      break;
    }

  Engine eng{order, {}, {}};
  auto add_element = [&](Terms t) {
    scale_primitive(t);
    eng.basis.push_back(std::move(t));
    eng.alive.push_back(true);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Terms t = eng.reduce(to_working(g, order));
    if (!t.empty()) add_element(std::move(t));
  }

  using Pair = std::pair<int, int>;
  std::set<Pair> treated;
  auto lcm_of = [&](int i, int j) {
    return eng.basis[i].front().mono.lcm_with(eng.basis[j].front().mono);
  };
  // Pair queue keyed by lcm degree (normal selection strategy).
  std::multimap<int, Pair> queue;
  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i)
      queue.emplace(lcm_of(i, t).degree(), Pair{i, t});
  };
  for (std::size_t t = 1; t < eng.basis.size(); ++t) push_pairs_for(static_cast<int>(t));

  while (!queue.empty()) {
    auto it = queue.begin();
    auto [i, j] = it->second;
    queue.erase(it);
    treated.insert({i, j});
    const Monomial lij = lcm_of(i, j);
    if (degree_bound && lij.degree() > *degree_bound) continue;
    if (eng.basis[i].front().mono.is_coprime_with(eng.basis[j].front().mono)) continue;
    // Chain criterion: some treated third element divides the lcm.
    bool skip = false;
    for (std::size_t k = 0; k < eng.basis.size() && !skip; ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (!eng.basis[k].front().mono.divides(lij)) continue;
      Pair pik{std::min<int>(i, k), std::max<int>(i, k)};
      Pair pjk{std::min<int>(j, k), std::max<int>(j, k)};
      if (treated.count(pik) && treated.count(pjk)) skip = true;
    }
    if (skip) continue;

    const Terms &fi = eng.basis[i], &fj = eng.basis[j];
    Monomial mi = lij.quotient_by(fi.front().mono);
    Monomial mj = lij.quotient_by(fj.front().mono);
    // S-polynomial: (lcm/lt_i) f_i - (lc_i/lc_j) (lcm/lt_j) f_j, scaled by lc_i.
    Terms s;
    s.reserve(fi.size());
    for (const auto& t : fi) s.push_back({t.mono * mi, t.coeff / fi.front().coeff});
    s = subtract_multiple(s, Rational(1) / fj.front().coeff, mj, fj, order);
    Terms rem = eng.reduce(std::move(s));
    if (rem.empty()) continue;
    add_element(std::move(rem));
    push_pairs_for(static_cast<int>(eng.basis.size()) - 1);
  }

  // Drop elements whose leading term is divisible by another leading term,
  // then fully inter-reduce the survivors.
  for (std::size_t a = 0; a < eng.basis.size(); ++a) {
    if (!eng.alive[a]) continue;
    for (std::size_t b = 0; b < eng.basis.size(); ++b) {
      if (a == b || !eng.alive[b]) continue;
      if (eng.basis[b].front().mono.divides(eng.basis[a].front().mono) &&
          !(eng.basis[a].front().mono == eng.basis[b].front().mono && a < b)) {
        eng.alive[a] = false;
        break;
      }
    }
  }
  for (std::size_t a = 0; a < eng.basis.size(); ++a) {
    if (!eng.alive[a]) continue;
    eng.alive[a] = false;  // reduce against the others only
    Terms r = eng.reduce(eng.basis[a]);
    eng.alive[a] = true;
    if (r.empty()) {
      eng.alive[a] = false;
    } else {
      scale_primitive(r);
      eng.basis[a] = std::move(r);
    }
  }

  GroebnerBasis out;
  out.order = order;
  out.degree_bound = degree_bound;
  std::vector<Terms> kept;
  for (std::size_t a = 0; a < eng.basis.size(); ++a)
    if (eng.alive[a]) kept.push_back(eng.basis[a]);
  std::sort(kept.begin(), kept.end(), [&](const Terms& x, const Terms& y) {
    return compare(x.front().mono, y.front().mono, order) < 0;
  });
  for (auto& t : kept) {
    Rational lc = t.front().coeff;
    for (auto& x : t) x.coeff /= lc;
    out.leading.push_back(t.front().mono);
    out.elements.push_back(from_working(ring, nvars, std::move(t)));
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  Engine eng{basis.order, {}, {}};
  for (const auto& e : basis.elements) {
    eng.basis.push_back(to_working(e, basis.order));
    eng.alive.push_back(true);
  }
  Terms r = eng.reduce(to_working(f, basis.order));
  return from_working(f.ring(), f.nvars(), std::move(r));
}

struct GradedIdeal::Cache {
  std::vector<std::pair<MonomialOrder, GroebnerBasis>> full;
  std::optional<GroebnerBasis> truncated;  // grevlex
};

GradedIdeal::GradedIdeal(VariableSet vars, std::vector<Polynomial> gens)
    : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    gens_.push_back(g.primitive_scaled());
  }
}

const GroebnerBasis& GradedIdeal::basis(const MonomialOrder& order) const {
  for (const auto& [o, b] : cache_->full)
    if (o.kind == order.kind && o.block == order.block) return b;
  cache_->full.emplace_back(order, buchberger(gens_, order));
  return cache_->full.back().second;
}

const GroebnerBasis& GradedIdeal::truncated_basis(int degree) const {
  for (const auto& [o, b] : cache_->full)
    if (o.kind == MonomialOrder::Kind::Grevlex) return b;
  if (cache_->truncated && *cache_->truncated->degree_bound >= degree)
    return *cache_->truncated;
  cache_->truncated = buchberger(gens_, MonomialOrder::grevlex(), degree);
  return *cache_->truncated;
}

bool GradedIdeal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, basis()).is_zero();
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b) {
  for (const auto& g : a.gens())
    if (!b.contains(g)) return false;
  for (const auto& g : b.gens())
    if (!a.contains(g)) return false;
  return true;
}

int hf_of_ideal(const GradedIdeal& ideal, int k) {
  if (k < 0) throw KOutOfRange("negative degree");
  if (k == 0) return 1;
  const GroebnerBasis& gb = ideal.truncated_basis(k);
  std::vector<Monomial> lead;
  for (const auto& m : gb.leading)
    if (m.degree() <= k) lead.push_back(m);
  int count = 0;
  for (const auto& m : monomial_basis(ideal.nvars(), k)) {
    bool standard = true;
    for (const auto& l : lead)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  return count;
}

namespace {

Polynomial shift_vars(const Polynomial& p, int by, int new_nvars) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(new_nvars);
    for (int i = 0; i < t.mono.nvars(); ++i) m[i + by] = t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(p.ring(), new_nvars, std::move(terms));
}

Polynomial unshift_vars(const Polynomial& p, int by, int new_nvars) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(new_nvars);
    for (int i = 0; i < by; ++i)
      if (t.mono[i] != 0) throw Error("unshift: auxiliary variable present");
    for (int i = 0; i < new_nvars; ++i) m[i] = t.mono[i + by];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(p.ring(), new_nvars, std::move(terms));
}

// Elements of a reduced elimination basis that avoid the first `aux`
// variables, mapped back to the base ring.
std::vector<Polynomial> eliminate_aux(const GroebnerBasis& gb, int aux, int base_nvars) {
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements) {
    bool uses_aux = false;
    for (const auto& t : e.terms())
      for (int i = 0; i < aux && !uses_aux; ++i)
        if (t.mono[i] != 0) uses_aux = true;
    if (!uses_aux) out.push_back(unshift_vars(e, aux, base_nvars));
  }
  return out;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  if (p.is_zero()) return Polynomial(p.ring(), p.nvars());
  MonomialOrder order = MonomialOrder::grevlex();
  Terms rem = to_working(p, order);
  Terms div = to_working(f, order);
  std::vector<Term> quo;
  while (!rem.empty()) {
    if (!div.front().mono.divides(rem.front().mono))
      throw Error("exact_divide: not divisible");
    Rational c = rem.front().coeff / div.front().coeff;
    Monomial m = rem.front().mono.quotient_by(div.front().mono);
    quo.push_back({m, c});
    rem = subtract_multiple(rem, c, m, div, order);
  }
  return Polynomial::from_terms(p.ring(), p.nvars(), std::move(quo));
}

}  // namespace

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.gens().empty() || b.gens().empty())
    return GradedIdeal(a.vars(), {});
  const int n = a.nvars();
  const int ext = n + 1;
  Polynomial w = Polynomial::variable(Ring::Dual, ext, 0);
  Polynomial one = Polynomial::constant(Ring::Dual, ext, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(w * shift_vars(g, 1, ext));
  for (const auto& g : b.gens()) gens.push_back((one - w) * shift_vars(g, 1, ext));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::elim(1));
  return GradedIdeal(a.vars(), eliminate_aux(gb, 1, n));
}

GradedIdeal colon_ideal(const GradedIdeal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error("colon by zero");
  if (ideal.gens().empty()) return ideal;
  GradedIdeal meet = intersect(ideal, GradedIdeal(ideal.vars(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.gens()) gens.push_back(exact_divide(g, f));
  return GradedIdeal(ideal.vars(), std::move(gens));
}

GradedIdeal saturate_by(const GradedIdeal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error("saturation by zero");
  if (ideal.gens().empty()) return ideal;
  const int n = ideal.nvars();
  const int ext = n + 1;
  Polynomial w = Polynomial::variable(Ring::Dual, ext, 0);
  Polynomial one = Polynomial::constant(Ring::Dual, ext, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(shift_vars(g, 1, ext));
  gens.push_back(one - w * shift_vars(f, 1, ext));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::elim(1));
  return GradedIdeal(ideal.vars(), eliminate_aux(gb, 1, n));
}

GradedIdeal saturation(const GradedIdeal& ideal) {
  if (ideal.gens().empty()) return ideal;
  GradedIdeal out = saturate_by(ideal, Polynomial::variable(Ring::Dual, ideal.nvars(), 0));
  for (int i = 1; i < ideal.nvars(); ++i)
    out = intersect(out, saturate_by(ideal, Polynomial::variable(Ring::Dual, ideal.nvars(), i)));
  return out;
}

bool contains_linear_form(const GradedIdeal& ideal) {
  if (ideal.gens().empty()) return false;
  for (const auto& e : ideal.basis().elements)
    if (e.degree() == 1) return true;
  return false;
}

bool is_saturated(const GradedIdeal& ideal) {
  return ideal_equal(ideal, saturation(ideal));
}

namespace {

struct MonomialIndex {
  std::map<std::vector<int>, int> index;
  explicit MonomialIndex(const std::vector<Monomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      index.emplace(basis[i].exps(), static_cast<int>(i));
  }
  int of(const Monomial& m) const {
    auto it = index.find(m.exps());
    return it == index.end() ? -1 : it->second;
  }
};

// Basis of the prolongation of W (subspace of degree k-1 coefficients):
// all degree-k coefficient vectors whose every shift D_i lands in W.
// Returned rows live in the degree-k coordinate space.
Matrix<Rational> prolongation_basis(const Matrix<Rational>& w, int nvars, int k) {
  const auto basis_km1 = monomial_basis(nvars, k - 1);
  const auto basis_km2 = monomial_basis(nvars, k - 2);
  const auto basis_k = monomial_basis(nvars, k);
  MonomialIndex idx_km1(basis_km1);
  MonomialIndex idx_km2(basis_km2);
  const int wdim = w.rows();
  const int unknowns = nvars * wdim;  // alpha[j][s]: h_j = sum_s alpha w_s

  // Constraints D_i h_j = D_j h_i on every degree-(k-2) coordinate.
  Matrix<Rational> cons(0, unknowns);
  for (int i = 0; i < nvars; ++i)
    for (int j = i + 1; j < nvars; ++j)
      for (std::size_t mi = 0; mi < basis_km2.size(); ++mi) {
        std::vector<Rational> row(unknowns, Rational(0));
        Monomial m = basis_km2[mi];
        Monomial myi = m, myj = m;
        myi[i] += 1;
        myj[j] += 1;
        int col_i = idx_km1.of(myi);  // coordinate of D_i h_j at m
        int col_j = idx_km1.of(myj);
        for (int s = 0; s < wdim; ++s) {
          row[j * wdim + s] += w.at(s, col_i);
          row[i * wdim + s] -= w.at(s, col_j);
        }
        bool nonzero = false;
        for (const auto& x : row) nonzero = nonzero || !is_zero(x);
        if (nonzero) cons.append_row(row);
      }

  std::vector<std::vector<Rational>> alphas;
  if (cons.rows() == 0) {
    for (int u = 0; u < unknowns; ++u) {
      std::vector<Rational> a(unknowns, Rational(0));
      a[u] = 1;
      alphas.push_back(std::move(a));
    }
  } else {
    alphas = kernel_basis(cons);
  }

  Matrix<Rational> out(0, static_cast<int>(basis_k.size()));
  for (const auto& a : alphas) {
    std::vector<Rational> g(basis_k.size(), Rational(0));
    for (std::size_t mi = 0; mi < basis_k.size(); ++mi) {
      const Monomial& m = basis_k[mi];
      int j = 0;
      while (m[j] == 0) ++j;
      Monomial quot = m;
      quot[j] -= 1;
      int col = idx_km1.of(quot);
      for (int s = 0; s < wdim; ++s) g[mi] += a[j * wdim + s] * w.at(s, col);
    }
    out.append_row(g);
  }
  return out;
}

std::vector<Polynomial> kernel_polys(const Matrix<Rational>& span, int nvars, int k) {
  const auto basis = monomial_basis(nvars, k);
  std::vector<Polynomial> out;
  for (const auto& v : kernel_basis(span))
    out.push_back(from_coeff_row(Ring::Dual, nvars, basis, v).primitive_scaled());
  return out;
}

}  // namespace

std::vector<Polynomial> minimal_generators_from_chain(const GradedKernelChain& chain) {
  const int n = chain.nvars;
  std::vector<Polynomial> gens;
  Matrix<Rational> prev;  // rref'd span at the previous degree
  for (int k = 1; k <= chain.max_degree; ++k) {
    const auto basis_k = monomial_basis(n, k);
    RrefResult<Rational> wr = rref(chain.spans[k]);
    Matrix<Rational> w(wr.rank, static_cast<int>(basis_k.size()));
    for (int i = 0; i < wr.rank; ++i) w.set_row(i, wr.reduced.row(i));
    if (k == 1) {
      for (auto& p : kernel_polys(w, n, 1)) gens.push_back(std::move(p));
      prev = std::move(w);
      continue;
    }
    Matrix<Rational> prol = prolongation_basis(prev, n, k);
    // Select prolongation vectors independent modulo the degree-k span.
    Echelon<Rational> ech;
    for (int i = 0; i < w.rows(); ++i) ech.insert(w.row(i));
    std::vector<std::vector<Rational>> extras;
    for (int i = 0; i < prol.rows(); ++i)
      if (ech.insert(prol.row(i))) extras.push_back(prol.row(i));
    if (!extras.empty()) {
      // New generators pair nondegenerately with the extras and annihilate
      // the span: particular solutions of [w; extras] h = e_{w_rank + i}.
      Matrix<Rational> sys = w;
      for (const auto& u : extras) sys.append_row(u);
      const int rows = sys.rows();
      Matrix<Rational> aug(rows, sys.cols() + static_cast<int>(extras.size()));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < sys.cols(); ++j) aug.at(i, j) = sys.at(i, j);
      for (std::size_t i = 0; i < extras.size(); ++i)
        aug.at(w.rows() + static_cast<int>(i), sys.cols() + static_cast<int>(i)) = 1;
      RrefResult<Rational> r = rref(std::move(aug));
      for (std::size_t i = 0; i < extras.size(); ++i) {
        std::vector<Rational> h(basis_k.size(), Rational(0));
        for (int a = 0; a < r.rank; ++a) {
          if (r.pivots[a] >= sys.cols()) continue;
          h[r.pivots[a]] = r.reduced.at(a, sys.cols() + static_cast<int>(i));
        }
        Polynomial p = from_coeff_row(Ring::Dual, n, basis_k, h);
        if (!p.is_zero()) gens.push_back(p.primitive_scaled());
      }
    }
    prev = std::move(w);
  }
  return gens;
}

GradedIdeal ideal_of_points(const VariableSet& vars,
                            const std::vector<std::vector<Rational>>& points) {
  const int n = vars.count();
  const int r = static_cast<int>(points.size());
  if (r == 0) throw Error("ideal_of_points: no points");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw Error("ideal_of_points: bad coordinates");
    bool nonzero = false;
    for (const auto& c : p) nonzero = nonzero || !is_zero(c);
    if (!nonzero) throw Error("ideal_of_points: zero point");
  }
  // Projective duplicates: proportional coordinate vectors.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Matrix<Rational> two(2, n);
      two.set_row(0, points[i]);
      two.set_row(1, points[j]);
      if (rank(two) < 2) throw DuplicatePoint("points " + std::to_string(i) + " and " +
                                              std::to_string(j));
    }

  GradedKernelChain chain;
  chain.nvars = n;
  chain.max_degree = r;
  chain.spans.resize(r + 1);
  for (int k = 0; k <= r; ++k) {
    const auto basis = monomial_basis(n, k);
    Matrix<Rational> e(r, static_cast<int>(basis.size()));
    for (int i = 0; i < r; ++i)
      for (std::size_t m = 0; m < basis.size(); ++m) {
        Rational v(1);
        for (int var = 0; var < n; ++var)
          for (int rep = 0; rep < basis[m][var]; ++rep) v *= points[i][var];
        e.at(i, static_cast<int>(m)) = v;
      }
    chain.spans[k] = std::move(e);
  }
  return GradedIdeal(vars, minimal_generators_from_chain(chain));
}

}  // namespace wildforms
