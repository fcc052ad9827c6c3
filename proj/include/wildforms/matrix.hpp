#ifndef WILDFORMS_MATRIX_HPP
#define WILDFORMS_MATRIX_HPP

#include <optional>
#include <vector>

#include "wildforms/error.hpp"
#include "wildforms/ratfunc.hpp"
#include "wildforms/rational.hpp"

namespace wildforms {

// Dense exact matrix over Q or Q(t). Row-major.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[i * cols_ + j]; }
  const K& at(int i, int j) const { return a_[i * cols_ + j]; }

  std::vector<K> row(int i) const {
    return std::vector<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(int i, const std::vector<K>& r) {
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
  }
  void append_row(const std::vector<K>& r) {
    if (static_cast<int>(r.size()) != cols_) throw Error("append_row: size mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: shape mismatch");
    Matrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& x = at(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
      }
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<K> a_;
};

template <class K>
struct RrefResult {
  Matrix<K> reduced;
  int rank = 0;
  std::vector<int> pivots;
};

// Reduced row echelon form via Gauss-Jordan with exact field arithmetic.
template <class K>
RrefResult<K> rref(Matrix<K> m) {
  RrefResult<K> out;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    K inv = K(1) / m.at(r, col);
    for (int j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, col))) continue;
      K f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class K>
int rank(const Matrix<K>& m) {
  return rref(m).rank;
}

// Basis of the right kernel; vectors are independent, count = cols - rank.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  RrefResult<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[j] = K(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of A x = b, if any.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult<K> r = rref(std::move(aug));
  for (int i = 0; i < r.rank; ++i)
    if (r.pivots[i] == a.cols()) return std::nullopt;
  std::vector<K> x(a.cols(), K(0));
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced.at(i, a.cols());
  return x;
}

// Basis of the limit subspace as t -> 0 of the row space of a Q(t)-matrix.
// Output row count equals the rank over Q(t).
Matrix<Rational> limit_subspace(const Matrix<RatFunc>& m);

// Row space membership/containment over a field.
template <class K>
bool row_space_contains(const Matrix<K>& space, const std::vector<K>& v) {
  Matrix<K> stacked = space;
  stacked.append_row(v);
  return rank(stacked) == rank(space);
}

// Incremental row echelon; each stored row is normalized to pivot 1 and has
// zeros at all pivots stored before it, so a single reduction pass decides
// membership.
template <class K>
class Echelon {
 public:
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<K>>& rows() const { return rows_; }

  // Reduces v in place against the stored rows; returns true (and stores the
  // residual) when v was independent.
  bool insert(std::vector<K> v) {
    reduce(v);
    int piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) return false;
    K inv = K(1) / v[piv];
    for (auto& x : v) x = x * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(std::vector<K> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  void reduce(std::vector<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K& c = v[pivots_[r]];
      if (is_zero(c)) continue;
      K f = c;
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
  }

  std::vector<std::vector<K>> rows_;
  std::vector<int> pivots_;
};

}  // namespace wildforms

#endif
