#include "wildforms/apolar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wildforms {

Catalecticant catalecticant(const Form& f, int i) {
  const int d = f.degree();
  if (i < 0 || i > d) throw KOutOfRange("catalecticant degree out of range");
  const int n = f.nvars();
  Catalecticant cat;
  cat.source_degree = i;
  cat.target_degree = d - i;
  cat.row_basis = monomial_basis(n, d - i);
  cat.col_basis = monomial_basis(n, i);
  cat.matrix = Matrix<Rational>(static_cast<int>(cat.row_basis.size()),
                                static_cast<int>(cat.col_basis.size()));
  for (std::size_t c = 0; c < cat.col_basis.size(); ++c) {
    Polynomial image = apply_dual(Polynomial::monomial(Ring::Dual, cat.col_basis[c]),
                                  f.poly());
    for (const auto& t : image.terms()) {
      auto it = std::find(cat.row_basis.begin(), cat.row_basis.end(), t.mono);
      cat.matrix.at(static_cast<int>(it - cat.row_basis.begin()), static_cast<int>(c)) =
          t.coeff;
    }
  }
  cat.rank_value = rank(cat.matrix);
  return cat;
}

std::vector<Polynomial> annihilator_component(const Form& f, int k) {
  if (k < 0 || k > f.degree() + 1) throw KOutOfRange("annihilator degree out of range");
  const int n = f.nvars();
  if (k > f.degree()) {
    std::vector<Polynomial> all;
    for (const auto& m : monomial_basis(n, k))
      all.push_back(Polynomial::monomial(Ring::Dual, m));
    return all;
  }
  Catalecticant cat = catalecticant(f, k);
  std::vector<Polynomial> out;
  for (const auto& v : kernel_basis(cat.matrix))
    out.push_back(from_coeff_row(Ring::Dual, n, cat.col_basis, v).primitive_scaled());
  return out;
}

GradedIdeal annihilator_generators(const Form& f, const std::optional<VariableSet>& vars) {
  const int n = f.nvars();
  const int d = f.degree();
  GradedKernelChain chain;
  chain.nvars = n;
  chain.max_degree = d + 1;
  chain.spans.resize(d + 2);
  for (int k = 0; k <= d; ++k) chain.spans[k] = catalecticant(f, k).matrix;
  chain.spans[d + 1] =
      Matrix<Rational>(0, static_cast<int>(monomial_basis(n, d + 1).size()));
  VariableSet vs = vars ? *vars : VariableSet::standard(n);
  return GradedIdeal(vs, minimal_generators_from_chain(chain));
}

int HilbertFunctionTable::max_value() const {
  int m = 0;
  for (int v : values) m = std::max(m, v);
  return m;
}

bool HilbertFunctionTable::symmetric() const {
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] != values[values.size() - 1 - k]) return false;
  return true;
}

HilbertFunctionTable hilbert_function(const Form& f) {
  HilbertFunctionTable table;
  for (int k = 0; k <= f.degree(); ++k)
    table.values.push_back(catalecticant(f, k).rank_value);
  return table;
}

bool is_concise(const Form& f) {
  return catalecticant(f, 1).rank_value == f.nvars();
}

int rank_lower_bound(const Form& f) { return hilbert_function(f).max_value(); }

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix hessian_matrix(const Form& f) {
  const int n = f.nvars();
  PolyMatrix h(n, std::vector<Polynomial>(n));
  std::vector<Polynomial> first;
  for (int i = 0; i < n; ++i) first.push_back(f.poly().derivative(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) h[i][j] = h[j][i] = first[i].derivative(j);
  return h;
}

// Degree-lex monomial basis of (T/Ann F)_k: greedy lex scan keeping the
// monomials whose catalecticant columns stay independent.
std::vector<Monomial> quotient_basis(const Form& f, int k) {
  Catalecticant cat = catalecticant(f, k);
  std::vector<int> order(cat.col_basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return compare(cat.col_basis[a], cat.col_basis[b], MonomialOrder::lex()) > 0;
  });
  Echelon<Rational> ech;
  std::vector<Monomial> basis;
  for (int c : order) {
    std::vector<Rational> col(cat.matrix.rows());
    for (int r = 0; r < cat.matrix.rows(); ++r) col[r] = cat.matrix.at(r, c);
    if (ech.insert(std::move(col))) basis.push_back(cat.col_basis[c]);
  }
  return basis;
}

HessianStatus decide_det_vanishing(const PolyMatrix& m, const HessianOptions& opts) {
  HessianStatus st;
  st.matrix_size = static_cast<int>(m.size());
  const int n = st.matrix_size;
  const int nv = m[0][0].nvars();
  int entry_degree = 0;
  for (const auto& row : m)
    for (const auto& p : row) entry_degree = std::max(entry_degree, p.degree());
  if (opts.exact) {
    Polynomial det = poly_matrix_det(m);
    st.exact = true;
    st.vanishes = det.is_zero();
    if (n <= 8) st.determinant = std::move(det);
    return st;
  }
  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  for (int s = 0; s < opts.samples; ++s) {
    std::vector<Rational> point(nv);
    for (int i = 0; i < nv; ++i) point[i] = Rational(rng.next_integer(opts.coeff_bits));
    Matrix<Rational> eval(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) eval.at(i, j) = m[i][j].eval(point);
    if (rank(eval) == n) {
      st.vanishes = false;
      st.witness_point = std::move(point);
      return st;
    }
  }
  // All samples singular: vanishing, up to Schwartz-Zippel failure.
  st.vanishes = true;
  double deg = std::max(1, n * entry_degree);
  st.log2_failure_bound = opts.samples * (std::log2(deg) - double(opts.coeff_bits));
  return st;
}

}  // namespace

HessianStatus hessian_vanishes(const Form& f, const HessianOptions& opts) {
  if (f.degree() < 2) throw DegreeTooSmall("Hessian needs degree >= 2");
  return decide_det_vanishing(hessian_matrix(f), opts);
}

HessianStatus higher_hessian_vanishes(const Form& f, int k, const HessianOptions& opts) {
  if (k < 1 || 2 * k > f.degree()) throw KOutOfRange("higher Hessian index");
  std::vector<Monomial> alphas = quotient_basis(f, k);
  const int n = static_cast<int>(alphas.size());
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Polynomial op = Polynomial::monomial(Ring::Dual, alphas[i] * alphas[j]);
      m[i][j] = m[j][i] = apply_dual(op, f.poly());
    }
  return decide_det_vanishing(m, opts);
}

SlpResult has_slp(const Form& f, const HessianOptions& opts) {
  SlpResult out;
  out.has_slp = true;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    out.by_k.push_back(higher_hessian_vanishes(f, k, opts));
    if (out.by_k.back().vanishes) out.has_slp = false;
  }
  return out;
}

bool algebraically_independent(const std::vector<Polynomial>& forms, std::uint64_t seed) {
  const int r = static_cast<int>(forms.size());
  if (r == 0) return true;
  const int n = forms[0].nvars();
  if (r > n) return false;
  PolyMatrix jac(r, std::vector<Polynomial>(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) jac[i][j] = forms[i].derivative(j);
  Rng rng(seed ^ 0x6a09e667f3bcc909ull);
  for (int s = 0; s < 4; ++s) {
    std::vector<Rational> point(n);
    for (int i = 0; i < n; ++i) point[i] = Rational(rng.next_integer(48));
    Matrix<Rational> eval(r, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) eval.at(i, j) = jac[i][j].eval(point);
    // A full-rank rational evaluation certifies independence exactly.
    if (rank(eval) == r) return true;
  }
  // Dependence claim: confirm symbolically that all r x r minors vanish.
  std::vector<int> cols(r);
  for (int i = 0; i < r; ++i) cols[i] = i;
  while (true) {
    PolyMatrix minor(r, std::vector<Polynomial>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) minor[i][j] = jac[i][cols[j]];
    if (!poly_matrix_det(minor).is_zero()) return true;  // sampling was unlucky
    int pos = r - 1;
    while (pos >= 0 && cols[pos] == n - r + pos) --pos;
    if (pos < 0) break;
    ++cols[pos];
    for (int i = pos + 1; i < r; ++i) cols[i] = cols[i - 1] + 1;
  }
  return false;
}

std::string to_string(WildnessVerdict::Kind k) {
  switch (k) {
    case WildnessVerdict::Kind::Wild: return "Wild";
    case WildnessVerdict::Kind::NotWild: return "NotWild";
    case WildnessVerdict::Kind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string to_string(NotApplicableReason r) {
  switch (r) {
    case NotApplicableReason::NotConcise: return "NotConcise";
    case NotApplicableReason::NonMinimalBorderRank: return "NonMinimalBorderRank";
  }
  return "?";
}

WildnessVerdict classify_wild(const Form& f, const MinimalBorderRankCertificate& cert,
                              const HessianOptions& opts) {
  WildnessVerdict v;
  v.hf = hilbert_function(f);
  v.lower_bound = v.hf.max_value();
  const int dim = f.nvars();
  if (v.hf.values.size() < 2 || v.hf.values[1] != dim) {
    v.kind = WildnessVerdict::Kind::NotApplicable;
    v.reason = NotApplicableReason::NotConcise;
    return v;
  }
  if (v.lower_bound > dim) {
    // Any minimality certificate is refuted by the catalecticant bound.
    v.kind = WildnessVerdict::Kind::NotApplicable;
    v.reason = NotApplicableReason::NonMinimalBorderRank;
    return v;
  }
  if (cert.decomposition) {
    const BorderDecomposition& d = *cert.decomposition;
    if (static_cast<int>(d.summands.size()) != dim)
      throw CertificateInvalid("decomposition length " +
                               std::to_string(d.summands.size()) + ", need " +
                               std::to_string(dim));
    VerifyReport rep = verify_border_decomposition(d, f);
    if (!rep.ok)
      throw CertificateInvalid("decomposition fails at t-order " +
                               std::to_string(rep.failing_order));
    v.certificate = "verified-decomposition(" + std::to_string(dim) + ")";
  } else {
    v.certificate = "assumed-minimal";
  }
  v.hessian = hessian_vanishes(f, opts);
  const std::string r = std::to_string(dim);
  if (v.hessian->vanishes) {
    v.kind = WildnessVerdict::Kind::Wild;
    v.rank_conclusions = "cr(F) > " + r + ", sr(F) > " + r;
  } else {
    v.kind = WildnessVerdict::Kind::NotWild;
    v.rank_conclusions = "cr(F) = sr(F) = " + r;
  }
  return v;
}

}  // namespace wildforms
