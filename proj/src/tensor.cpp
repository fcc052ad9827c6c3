#include "wildforms/tensor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wildforms {

Tensor::Tensor(int ways, int dim) : ways_(ways), dim_(dim) {
  if (ways < 1 || dim < 1) throw Error("bad tensor shape");
  std::size_t size = 1;
  for (int i = 0; i < ways; ++i) size *= static_cast<std::size_t>(dim);
  a_.assign(size, Rational(0));
}

std::size_t Tensor::offset(const std::vector<int>& idx) const {
  std::size_t o = 0;
  for (int i : idx) o = o * dim_ + static_cast<std::size_t>(i);
  return o;
}

namespace {

bool next_index(std::vector<int>& idx, int dim) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (++idx[pos] < dim) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

bool Tensor::is_symmetric() const {
  std::vector<int> idx(ways_, 0);
  do {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (at(idx) != at(sorted)) return false;
  } while (next_index(idx, dim_));
  return true;
}

Tensor Tensor::contract_first(const std::vector<Rational>& v) const {
  if (ways_ < 2) throw Error("cannot contract a vector");
  Tensor out(ways_ - 1, dim_);
  std::vector<int> idx(ways_ - 1, 0);
  do {
    Rational acc(0);
    std::vector<int> full(ways_);
    std::copy(idx.begin(), idx.end(), full.begin() + 1);
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(v[i])) continue;
      full[0] = i;
      acc += v[i] * at(full);
    }
    out.at(idx) = acc;
  } while (next_index(idx, dim_));
  return out;
}

Tensor Tensor::mode_apply(int slot, const Matrix<Rational>& b) const {
  Tensor out(ways_, dim_);
  std::vector<int> idx(ways_, 0);
  do {
    Rational acc(0);
    std::vector<int> src = idx;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(b.at(idx[slot], j))) continue;
      src[slot] = j;
      acc += b.at(idx[slot], j) * at(src);
    }
    out.at(idx) = acc;
  } while (next_index(idx, dim_));
  return out;
}

Tensor structure_tensor(const FiniteAlgebra& a, int d) {
  if (d < 3) throw DegreeTooSmall("structure tensor needs d >= 3");
  const int m = a.dim();
  Tensor t(d, m);
  std::map<std::vector<int>, std::vector<Rational>> products;
  std::vector<int> idx(d - 1, 0);
  do {
    std::vector<int> key = idx;
    std::sort(key.begin(), key.end());
    auto it = products.find(key);
    if (it == products.end()) {
      std::vector<Rational> acc(m, Rational(0));
      acc[0] = 1;
      for (int s : key) {
        std::vector<Rational> basis_s(m, Rational(0));
        basis_s[s] = 1;
        acc = a.multiply(acc, basis_s);
      }
      it = products.emplace(std::move(key), std::move(acc)).first;
    }
    std::vector<int> full(d);
    std::copy(idx.begin(), idx.end(), full.begin());
    for (int k = 0; k < m; ++k) {
      full[d - 1] = k;
      t.at(full) = it->second[k];
    }
  } while (next_index(idx, m));
  return t;
}

Tensor tensor_of_form(const Form& f) {
  const int d = f.degree();
  const int n = f.nvars();
  Tensor t(d, n);
  std::vector<int> idx(d, 0);
  do {
    if (!std::is_sorted(idx.begin(), idx.end())) continue;
    Monomial m(n);
    for (int i : idx) m[i] += 1;
    Rational c = f.poly().coeff_of(m);
    if (is_zero(c)) continue;
    // multinomial d! / prod e_i!
    Integer mult(1);
    int used = 0;
    for (int v = 0; v < n; ++v)
      for (int rep = 1; rep <= m[v]; ++rep) {
        ++used;
        mult = mult * used / rep;
      }
    Rational value = c / Rational(mult);
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      t.at(perm) = value;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (next_index(idx, n));
  return t;
}

Form form_of_tensor(const Tensor& t) {
  if (!t.is_symmetric()) throw Error("form_of_tensor needs a symmetric tensor");
  const int d = t.ways(), n = t.dim();
  std::vector<Term> terms;
  std::vector<int> idx(d, 0);
  do {
    if (!std::is_sorted(idx.begin(), idx.end())) continue;
    const Rational& v = t.at(idx);
    if (is_zero(v)) continue;
    Monomial m(n);
    for (int i : idx) m[i] += 1;
    Integer mult(1);
    int used = 0;
    for (int var = 0; var < n; ++var)
      for (int rep = 1; rep <= m[var]; ++rep) {
        ++used;
        mult = mult * used / rep;
      }
    terms.push_back({std::move(m), v * Rational(mult)});
  } while (next_index(idx, n));
  return Form(Polynomial::from_terms(Ring::Primal, n, std::move(terms)));
}

Tensor symmetrize_structure_tensor(const FiniteAlgebra& a, const GorensteinWitness& w,
                                   int d) {
  const int m = a.dim();
  if (rank(w.pairing) != m) throw WitnessDegenerate("pairing matrix is singular");
  Tensor t(d, m);
  std::map<std::vector<int>, Rational> values;
  std::vector<int> idx(d, 0);
  do {
    std::vector<int> key = idx;
    std::sort(key.begin(), key.end());
    auto it = values.find(key);
    if (it == values.end()) {
      std::vector<Rational> acc(m, Rational(0));
      acc[0] = 1;
      for (int s : key) {
        std::vector<Rational> basis_s(m, Rational(0));
        basis_s[s] = 1;
        acc = a.multiply(acc, basis_s);
      }
      Rational e(0);
      for (int k = 0; k < m; ++k)
        if (!is_zero(acc[k])) e += acc[k] * w.functional[k];
      it = values.emplace(std::move(key), std::move(e)).first;
    }
    t.at(idx) = it->second;
  } while (next_index(idx, m));
  return t;
}

std::string MultMatrixReport::str() const {
  std::ostringstream os;
  os << "commutativity: " << (commutativity ? "pass" : "fail")
     << ", closure: " << (closure ? "pass" : "fail")
     << ", structure: " << (structure ? "pass" : "fail")
     << ", strassen: " << (strassen ? "pass" : "fail");
  for (const auto& f : failures) {
    os << "\n  " << f.identity << " at (";
    for (std::size_t i = 0; i < f.indices.size(); ++i)
      os << (i ? "," : "") << f.indices[i];
    os << ")";
  }
  return os.str();
}

namespace {

// M_i with (M_i)_{ab} = T[0,...,0,a,i,b].
Matrix<Rational> mult_matrix_of(const Tensor& t, int i) {
  const int m = t.dim(), d = t.ways();
  Matrix<Rational> out(m, m);
  std::vector<int> idx(d, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      idx[d - 3] = a;
      idx[d - 2] = i;
      idx[d - 1] = b;
      out.at(a, b) = t.at(idx);
    }
  return out;
}

}  // namespace

MultMatrixReport verify_multiplication_matrices(const Tensor& t) {
  const int m = t.dim(), d = t.ways();
  if (d < 3) throw Error("need a tensor with at least 3 ways");
  {
    std::vector<int> idx(d, 0);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        idx[d - 2] = k;
        idx[d - 1] = l;
        if (t.at(idx) != (k == l ? Rational(1) : Rational(0)))
          throw NotNormalized("T[0,...,0,k,l] is not the identity");
      }
  }
  MultMatrixReport rep;
  std::vector<Matrix<Rational>> mats;
  for (int i = 0; i < m; ++i) mats.push_back(mult_matrix_of(t, i));

  for (int i = 0; i < m && rep.commutativity; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(mats[i] * mats[j] == mats[j] * mats[i])) {
        rep.commutativity = false;
        rep.failures.push_back({"commutativity", {i, j}});
        break;
      }

  std::vector<int> idx(d, 0);
  for (int i = 0; i < m && rep.closure; ++i)
    for (int j = 0; j < m; ++j) {
      Matrix<Rational> rhs(m, m);
      for (int k = 0; k < m; ++k) {
        std::fill(idx.begin(), idx.end(), 0);
        idx[d - 3] = i;
        idx[d - 2] = j;
        idx[d - 1] = k;
        const Rational& c = t.at(idx);
        if (is_zero(c)) continue;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) rhs.at(a, b) += c * mats[k].at(a, b);
      }
      if (!(mats[i] * mats[j] == rhs)) {
        rep.closure = false;
        rep.failures.push_back({"closure", {i, j}});
        break;
      }
    }

  // Structure property over sorted (d-1)-tuples.
  {
    std::vector<int> tuple(d - 1, 0);
    bool done = false;
    while (!done && rep.structure) {
      if (std::is_sorted(tuple.begin(), tuple.end())) {
        Matrix<Rational> lhs = Matrix<Rational>::identity(m);
        for (int i : tuple) lhs = lhs * mats[i];
        Matrix<Rational> rhs(m, m);
        std::vector<int> full(d);
        std::copy(tuple.begin(), tuple.end(), full.begin());
        for (int j = 0; j < m; ++j) {
          full[d - 1] = j;
          const Rational& c = t.at(full);
          if (is_zero(c)) continue;
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) rhs.at(a, b) += c * mats[j].at(a, b);
        }
        if (!(lhs == rhs)) {
          rep.structure = false;
          rep.failures.push_back({"structure", tuple});
        }
      }
      done = !next_index(tuple, m);
    }
  }

  // Strassen commutator equations on sorted (d-2)-tuple pairs.
  {
    std::vector<int> ti(d - 2, 0);
    bool done_i = false;
    while (!done_i && rep.strassen) {
      if (std::is_sorted(ti.begin(), ti.end())) {
        std::vector<int> tj(d - 2, 0);
        bool done_j = false;
        while (!done_j && rep.strassen) {
          if (std::is_sorted(tj.begin(), tj.end())) {
            for (int j1 = 0; j1 < m && rep.strassen; ++j1)
              for (int j2 = 0; j2 < m; ++j2) {
                Rational lhs(0), rhs(0);
                std::vector<int> a(d), b(d);
                for (int k = 0; k < m; ++k) {
                  std::copy(ti.begin(), ti.end(), a.begin());
                  a[d - 2] = j1;
                  a[d - 1] = k;
                  std::copy(tj.begin(), tj.end(), b.begin());
                  b[d - 2] = k;
                  b[d - 1] = j2;
                  lhs += t.at(a) * t.at(b);
                  std::copy(tj.begin(), tj.end(), a.begin());
                  a[d - 2] = j1;
                  a[d - 1] = k;
                  std::copy(ti.begin(), ti.end(), b.begin());
                  b[d - 2] = k;
                  b[d - 1] = j2;
                  rhs += t.at(a) * t.at(b);
                }
                if (lhs != rhs) {
                  rep.strassen = false;
                  std::vector<int> where = ti;
                  where.insert(where.end(), tj.begin(), tj.end());
                  where.push_back(j1);
                  where.push_back(j2);
                  rep.failures.push_back({"strassen", where});
                  break;
                }
              }
          }
          done_j = !next_index(tj, m);
        }
      }
      done_i = !next_index(ti, m);
    }
  }
  return rep;
}

std::optional<std::vector<Rational>> hessian_witness(const Form& f, std::uint64_t seed) {
  const int n = f.nvars();
  std::vector<std::vector<Polynomial>> hess(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial di = f.poly().derivative(i);
    for (int j = i; j < n; ++j) hess[i][j] = hess[j][i] = di.derivative(j);
  }
  auto full_rank_at = [&](const std::vector<Rational>& pt) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = hess[i][j].eval(pt);
    return rank(m) == n;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    if (full_rank_at(e)) return e;
  }
  Rng rng(seed ^ 0xa54ff53a5f1d36f1ull);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> pt(n);
    for (auto& x : pt) x = rng.next_rational(12);
    if (full_rank_at(pt)) return pt;
  }
  // Exact decision; a nonzero determinant polynomial must have a witness.
  if (poly_matrix_det(hess).is_zero()) return std::nullopt;
  for (int trial = 0; trial < 4096; ++trial) {
    std::vector<Rational> pt(n);
    for (auto& x : pt) x = Rational(rng.next_integer(40));
    if (full_rank_at(pt)) return pt;
  }
  throw Error("hessian_witness: nonzero determinant but no sample found");
}

ReconstructedAlgebra algebra_from_tensor(const Tensor& tf,
                                         const std::vector<Rational>& ell) {
  const int m = tf.dim(), d = tf.ways();
  if (d < 3) throw Error("need a tensor with at least 3 ways");
  if (!tf.is_symmetric()) throw Error("algebra_from_tensor needs a symmetric tensor");

  // Contraction Q = T(ell^{d-2}).
  Tensor q2 = tf;
  for (int k = 0; k < d - 2; ++k) q2 = q2.contract_first(ell);
  Matrix<Rational> q(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) q.at(i, j) = q2.at({i, j});
  if (rank(q) != m) throw WitnessDegenerate("contraction is not full rank");

  // Basis v_0 = ell extended greedily by coordinate vectors.
  Matrix<Rational> basis(0, m);
  Echelon<Rational> ech;
  ech.insert(ell);
  basis.append_row(ell);
  for (int i = 0; i < m && basis.rows() < m; ++i) {
    std::vector<Rational> e(m, Rational(0));
    e[i] = 1;
    if (ech.insert(e)) basis.append_row(e);
  }

  // Q in the v-basis, then the dual basis rows: Q(v_i, v'_j) = delta.
  Matrix<Rational> qv = basis * q * basis.transposed();
  Matrix<Rational> aug(m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = qv.at(i, j);
    aug.at(i, m + i) = 1;
  }
  RrefResult<Rational> inv = rref(std::move(aug));
  if (inv.rank != m) throw WitnessDegenerate("contraction singular in the new basis");
  // v'_j = sum_s C_{sj} v_s with C = Qv^{-1}.
  Matrix<Rational> c(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c.at(i, j) = inv.reduced.at(i, m + j);
  Matrix<Rational> dual = c.transposed() * basis;

  Tensor normalized = tf;
  for (int slot = 0; slot < d - 1; ++slot) normalized = normalized.mode_apply(slot, basis);
  normalized = normalized.mode_apply(d - 1, dual);

  MultMatrixReport rep = verify_multiplication_matrices(normalized);
  if (!rep.all_pass())
    throw IdentityFailure("multiplication matrices are inconsistent", rep.str());

  // Structure constants from the closure identity.
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < m; ++i) labels.push_back("a" + std::to_string(i + 1));
  std::vector<std::vector<std::vector<Rational>>> table(
      m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
  std::vector<int> idx(d, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        std::fill(idx.begin(), idx.end(), 0);
        idx[d - 3] = i;
        idx[d - 2] = j;
        idx[d - 1] = k;
        table[i][j][k] = normalized.at(idx);
      }
  ReconstructedAlgebra out{FiniteAlgebra::from_table(std::move(labels), std::move(table)),
                           std::move(basis), std::move(dual), std::move(normalized),
                           std::move(rep)};
  return out;
}

}  // namespace wildforms

// JSON interchange appended separately to keep the math code above compact.
#include "json.hpp"

namespace wildforms {

std::string tensor_to_json(const Tensor& t) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "tensor";
  j["ways"] = t.ways();
  j["dim"] = t.dim();
  nlohmann::json entries = nlohmann::json::array();
  std::vector<int> idx(t.ways(), 0);
  while (true) {
    const Rational& v = t.at(idx);
    if (!is_zero(v)) {
      nlohmann::json one;
      one["idx"] = idx;
      one["c"] = to_string(v);
      entries.push_back(one);
    }
    int pos = t.ways() - 1;
    while (pos >= 0 && ++idx[pos] == t.dim()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  j["entries"] = entries;
  return j.dump(2);
}

Tensor tensor_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("json parse: ") + e.what());
  }
  try {
    Tensor t(j.at("ways").get<int>(), j.at("dim").get<int>());
    for (const auto& one : j.at("entries")) {
      std::vector<int> idx = one.at("idx").get<std::vector<int>>();
      if (static_cast<int>(idx.size()) != t.ways()) throw FormatError("bad index arity");
      for (int i : idx)
        if (i < 0 || i >= t.dim()) throw FormatError("index out of range");
      t.at(idx) = rational_from_string(one.at("c").get<std::string>());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("tensor json: ") + e.what());
  }
}

}  // namespace wildforms
