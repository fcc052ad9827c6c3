#include "wildforms/finite_algebra.hpp"

#include <algorithm>

#include "json.hpp"
#include "wildforms/groebner.hpp"
#include "wildforms/parser.hpp"

namespace wildforms {

FiniteAlgebra FiniteAlgebra::from_table(
    std::vector<std::string> labels,
    std::vector<std::vector<std::vector<Rational>>> table) {
  FiniteAlgebra a;
  a.dim_ = static_cast<int>(labels.size());
  a.labels_ = std::move(labels);
  a.table_ = std::move(table);
  const int m = a.dim_;
  if (static_cast<int>(a.table_.size()) != m) throw Error("bad table shape");
  for (const auto& row : a.table_) {
    if (static_cast<int>(row.size()) != m) throw Error("bad table shape");
    for (const auto& cell : row)
      if (static_cast<int>(cell.size()) != m) throw Error("bad table shape");
  }
  // Commutativity, unit law, associativity on all basis triples.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a.table_[i][j] != a.table_[j][i]) throw Error("algebra not commutative");
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      if (a.table_[0][j][k] != (j == k ? Rational(1) : Rational(0)))
        throw Error("basis element 0 is not the unit");
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int l = 0; l < m; ++l) {
        std::vector<Rational> left(m, Rational(0)), right(m, Rational(0));
        for (int k = 0; k < m; ++k) {
          const Rational& cij = a.table_[i][j][k];
          if (!is_zero(cij))
            for (int t = 0; t < m; ++t) left[t] += cij * a.table_[k][l][t];
          const Rational& cjl = a.table_[j][l][k];
          if (!is_zero(cjl))
            for (int t = 0; t < m; ++t) right[t] += cjl * a.table_[i][k][t];
        }
        if (left != right) throw Error("algebra not associative");
      }
  return a;
}

std::vector<Rational> FiniteAlgebra::multiply(const std::vector<Rational>& a,
                                              const std::vector<Rational>& b) const {
  std::vector<Rational> out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(b[j])) continue;
      Rational c = a[i] * b[j];
      for (int k = 0; k < dim_; ++k)
        if (!is_zero(table_[i][j][k])) out[k] += c * table_[i][j][k];
    }
  }
  return out;
}

Matrix<Rational> FiniteAlgebra::mult_matrix(const std::vector<Rational>& a) const {
  Matrix<Rational> m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<Rational> basis_j(dim_, Rational(0));
    basis_j[j] = 1;
    std::vector<Rational> col = multiply(a, basis_j);
    for (int k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

FiniteAlgebra apolar_algebra(const Form& f) {
  const int n = f.nvars();
  const int d = f.degree();
  GradedIdeal ann = annihilator_generators(f);
  const GroebnerBasis& gb = ann.basis();
  VariableSet vars = VariableSet::standard(n);

  std::vector<Monomial> std_monos;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : monomial_basis(n, k)) {
      bool standard = true;
      for (const auto& lt : gb.leading)
        if (lt.divides(m)) {
          standard = false;
          break;
        }
      if (standard) std_monos.push_back(m);
    }
  const int dim = static_cast<int>(std_monos.size());
  auto index_of = [&](const Monomial& m) {
    for (int i = 0; i < dim; ++i)
      if (std_monos[i] == m) return i;
    return -1;
  };

  std::vector<std::string> labels;
  for (const auto& m : std_monos) labels.push_back(print_monomial(m, Ring::Dual, vars));

  std::vector<std::vector<std::vector<Rational>>> table(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      Polynomial prod = Polynomial::monomial(Ring::Dual, std_monos[i] * std_monos[j]);
      Polynomial nf = normal_form(prod, gb);
      for (const auto& t : nf.terms()) {
        int k = index_of(t.mono);
        if (k < 0) throw Error("normal form left the standard monomial basis");
        table[i][j][k] = t.coeff;
      }
      table[j][i] = table[i][j];
    }
  return FiniteAlgebra::from_table(std::move(labels), std::move(table));
}

FiniteAlgebra diagonal_algebra(int m) {
  if (m < 1) throw Error("diagonal_algebra: dimension >= 1");
  // Basis a_0 = (1,...,1), a_i = e_i for i >= 1.
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < m; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::vector<std::vector<Rational>>> table(
      m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
  for (int j = 0; j < m; ++j) {
    table[0][j][j] = 1;
    table[j][0][j] = 1;
  }
  table[0][0] = std::vector<Rational>(m, Rational(0));
  table[0][0][0] = 1;
  for (int i = 1; i < m; ++i) table[i][i][i] = 1;
  return FiniteAlgebra::from_table(std::move(labels), std::move(table));
}

FiniteAlgebra jet_algebra(int k) {
  if (k < 1) throw Error("jet_algebra: length >= 1");
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < k; ++i)
    labels.push_back(i == 1 ? "y" : "y^" + std::to_string(i));
  std::vector<std::vector<std::vector<Rational>>> table(
      k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, Rational(0))));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) table[i][j][i + j] = 1;
  return FiniteAlgebra::from_table(std::move(labels), std::move(table));
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int ma = a.dim(), mb = b.dim(), m = ma + mb;
  // Direct-sum coordinates (x, y); basis rows: (1,1), (a_i, 0) i >= 1, (0, b_j).
  Matrix<Rational> basis(m, m);
  basis.at(0, 0) = 1;
  basis.at(0, ma) = 1;
  for (int i = 1; i < ma; ++i) basis.at(i, i) = 1;
  for (int j = 0; j < mb; ++j) basis.at(ma + j, ma + j) = 1;

  Matrix<Rational> bt = basis.transposed();
  Matrix<Rational> aug(m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = bt.at(i, j);
    aug.at(i, m + i) = 1;
  }
  RrefResult<Rational> r = rref(std::move(aug));
  if (r.rank != m) throw Error("product basis degenerate");
  Matrix<Rational> inv(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv.at(i, j) = r.reduced.at(i, m + j);

  auto mul_sum = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> xa(x.begin(), x.begin() + ma), xb(x.begin() + ma, x.end());
    std::vector<Rational> ya(y.begin(), y.begin() + ma), yb(y.begin() + ma, y.end());
    std::vector<Rational> pa = a.multiply(xa, ya), pb = b.multiply(xb, yb);
    std::vector<Rational> out(pa);
    out.insert(out.end(), pb.begin(), pb.end());
    return out;
  };

  std::vector<std::string> labels{"1"};
  for (int i = 1; i < ma; ++i) labels.push_back("L." + a.labels()[i]);
  for (int j = 0; j < mb; ++j) labels.push_back("R." + b.labels()[j]);
  std::vector<std::vector<std::vector<Rational>>> table(
      m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      std::vector<Rational> prod = mul_sum(basis.row(i), basis.row(j));
      for (int k = 0; k < m; ++k) {
        Rational c(0);
        for (int s = 0; s < m; ++s) c += inv.at(k, s) * prod[s];
        table[i][j][k] = c;
      }
      table[j][i] = table[i][j];
    }
  return FiniteAlgebra::from_table(std::move(labels), std::move(table));
}

namespace {

Matrix<Rational> pairing_matrix(const FiniteAlgebra& a, const std::vector<Rational>& e) {
  const int m = a.dim();
  Matrix<Rational> p(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational v(0);
      const std::vector<Rational>& prod = a.product(i, j);
      for (int k = 0; k < m; ++k)
        if (!is_zero(prod[k])) v += prod[k] * e[k];
      p.at(i, j) = v;
    }
  return p;
}

}  // namespace

std::optional<GorensteinWitness> is_gorenstein(const FiniteAlgebra& a, std::uint64_t seed) {
  const int m = a.dim();
  auto try_e = [&](std::vector<Rational> e) -> std::optional<GorensteinWitness> {
    Matrix<Rational> p = pairing_matrix(a, e);
    if (rank(p) == m) return GorensteinWitness{std::move(e), std::move(p)};
    return std::nullopt;
  };
  // Graded Gorenstein tables pair top against bottom degree, so scan the
  // coordinate functionals backwards first.
  for (int i = m - 1; i >= 0; --i) {
    std::vector<Rational> e(m, Rational(0));
    e[i] = 1;
    if (auto w = try_e(std::move(e))) return w;
  }
  Rng rng(seed ^ 0x1f83d9abfb41bd6bull);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> e(m);
    for (auto& x : e) x = Rational(rng.next_integer(24));
    if (auto w = try_e(std::move(e))) return w;
  }
  // No witness found; decide det P(e) = 0 as a polynomial in e.
  if (m <= 8) {
    std::vector<std::vector<Polynomial>> p(m, std::vector<Polynomial>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<Term> terms;
        const std::vector<Rational>& prod = a.product(i, j);
        for (int k = 0; k < m; ++k) {
          if (is_zero(prod[k])) continue;
          Monomial mono(m);
          mono[k] = 1;
          terms.push_back({std::move(mono), prod[k]});
        }
        p[i][j] = Polynomial::from_terms(Ring::Primal, m, std::move(terms));
      }
    if (poly_matrix_det(p).is_zero()) return std::nullopt;
    throw Error("gorenstein witness search missed a nonzero determinant");
  }
  if (socle_dimension_graded(a) != 1) return std::nullopt;
  throw Error("gorenstein witness search failed with socle dimension 1");
}

std::vector<std::vector<Rational>> socle(const FiniteAlgebra& a,
                                         const std::vector<std::vector<Rational>>& max_ideal) {
  const int m = a.dim();
  Echelon<Rational> span;
  for (const auto& g : max_ideal) span.insert(g);
  if (span.rank() != m - 1) throw NotAnIdeal("codimension is not one");
  for (const auto& g : max_ideal)
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> basis_i(m, Rational(0));
      basis_i[i] = 1;
      if (!span.contains(a.multiply(basis_i, g)))
        throw NotAnIdeal("span not closed under multiplication");
    }
  Matrix<Rational> stacked(0, m);
  for (const auto& g : max_ideal) {
    Matrix<Rational> mg = a.mult_matrix(g);
    for (int r = 0; r < m; ++r) stacked.append_row(mg.row(r));
  }
  return kernel_basis(stacked);
}

int socle_dimension_graded(const FiniteAlgebra& a) {
  const int m = a.dim();
  if (m == 1) return 1;
  std::vector<std::vector<Rational>> max_ideal;
  for (int i = 1; i < m; ++i) {
    std::vector<Rational> g(m, Rational(0));
    g[i] = 1;
    max_ideal.push_back(std::move(g));
  }
  return static_cast<int>(socle(a, max_ideal).size());
}

std::string algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "finite-algebra";
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  nlohmann::json consts = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int jj = i; jj < a.dim(); ++jj) {
      const auto& prod = a.product(i, jj);
      for (int k = 0; k < a.dim(); ++k) {
        if (is_zero(prod[k])) continue;
        nlohmann::json c;
        c["i"] = i + 1;
        c["j"] = jj + 1;
        c["k"] = k + 1;
        c["c"] = to_string(prod[k]);
        consts.push_back(c);
      }
    }
  j["constants"] = consts;
  return j.dump(2);
}

FiniteAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("json parse: ") + e.what());
  }
  try {
    const int m = j.at("dim").get<int>();
    if (m < 1) throw FormatError("dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("basis"))
      labels = j.at("basis").get<std::vector<std::string>>();
    else
      for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i + 1));
    if (static_cast<int>(labels.size()) != m) throw FormatError("basis size mismatch");
    std::vector<std::vector<std::vector<Rational>>> table(
        m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
    for (const auto& c : j.at("constants")) {
      int i = c.at("i").get<int>() - 1;
      int jj = c.at("j").get<int>() - 1;
      int k = c.at("k").get<int>() - 1;
      if (i < 0 || jj < 0 || k < 0 || i >= m || jj >= m || k >= m)
        throw FormatError("constant index out of range");
      Rational val = rational_from_string(c.at("c").get<std::string>());
      table[i][jj][k] = val;
      table[jj][i][k] = val;
    }
    return FiniteAlgebra::from_table(std::move(labels), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("algebra json: ") + e.what());
  }
}

}  // namespace wildforms
