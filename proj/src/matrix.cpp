#include "wildforms/matrix.hpp"

namespace wildforms {

namespace {

// Multiply a Q(t)-row by t^(-v) where v is the minimal valuation among its
// nonzero entries, so that the row becomes evaluable at t = 0 with a nonzero
// value.
void normalize_valuation(std::vector<RatFunc>& row) {
  int v = 0;
  bool seen = false;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    int xv = x.valuation();
    if (!seen || xv < v) v = xv;
    seen = true;
  }
  if (!seen || v == 0) return;
  RatFunc scale = v > 0 ? RatFunc(IntPoly(Integer(1)), IntPoly::t(v))
                        : RatFunc(IntPoly::t(-v), IntPoly(Integer(1)));
  for (auto& x : row)
    if (!x.is_zero()) x *= scale;
}

std::vector<Rational> eval_zero_row(const std::vector<RatFunc>& row) {
  std::vector<Rational> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].eval_zero();
  return out;
}

}  // namespace

Matrix<Rational> limit_subspace(const Matrix<RatFunc>& m) {
  RrefResult<RatFunc> r = rref(m);
  const int n = r.rank;
  const int cols = m.cols();
  std::vector<std::vector<RatFunc>> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = r.reduced.row(i);
    normalize_valuation(rows[i]);
  }
  // Row reduction + valuation rescaling alone can leave t = 0 evaluations
  // dependent; saturate the lattice: replace any Q-dependent combination by
  // the combination itself divided by its t-power, and repeat.
  const int max_rounds = 4096;
  for (int round = 0;; ++round) {
    if (round > max_rounds)
      throw DimensionDrop("limit_subspace failed to stabilize");
    Matrix<Rational> ev(n, cols);
    for (int i = 0; i < n; ++i) ev.set_row(i, eval_zero_row(rows[i]));
    std::vector<std::vector<Rational>> dep = kernel_basis(ev.transposed());
    if (dep.empty()) return ev;
    const std::vector<Rational>& c = dep.front();
    int target = -1;
    for (int i = n - 1; i >= 0; --i)
      if (!is_zero(c[i])) {
        target = i;
        break;
      }
    std::vector<RatFunc> combo(cols, RatFunc(0));
    for (int i = 0; i < n; ++i) {
      if (is_zero(c[i])) continue;
      RatFunc ci{Rational(c[i])};
      for (int j = 0; j < cols; ++j)
        if (!rows[i][j].is_zero()) combo[j] += ci * rows[i][j];
    }
    normalize_valuation(combo);
    bool all_zero = true;
    for (const auto& x : combo) all_zero = all_zero && x.is_zero();
    if (all_zero) throw DimensionDrop("limit_subspace: rank drop over Q(t)");
    rows[target] = std::move(combo);
  }
}

}  // namespace wildforms
