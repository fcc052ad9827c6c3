#ifndef WILDFORMS_TESTS_ORACLES_HPP
#define WILDFORMS_TESTS_ORACLES_HPP

// Independent test oracles. These deliberately avoid the library's rref /
// reduction paths: ranks come from fraction-free (Bareiss) elimination over
// the integers.

#include <vector>

#include "wildforms/matrix.hpp"
#include "wildforms/polynomial.hpp"

namespace wildforms::oracle {

// Fraction-free Gaussian elimination rank over Z after clearing denominators
// row by row.
inline int bareiss_rank(const Matrix<Rational>& in) {
  int rows = in.rows(), cols = in.cols();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (int i = 0; i < rows; ++i) {
    Integer lcm(1);
    for (int j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), in.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      Rational scaled = in.at(i, j) * Rational(lcm);
      m[i][j] = scaled.get_num();
    }
  }
  Integer prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline Matrix<Rational> random_matrix(Rng& rng, int rows, int cols, unsigned bits = 6) {
  Matrix<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = rng.next_below(4) == 0 ? Rational(0) : rng.next_rational(bits);
  return m;
}

inline Polynomial random_poly(Rng& rng, Ring ring, int nvars, int max_degree,
                              int max_terms) {
  std::vector<Term> terms;
  int count = 1 + static_cast<int>(rng.next_below(max_terms));
  for (int t = 0; t < count; ++t) {
    Monomial m(nvars);
    int deg = static_cast<int>(rng.next_below(max_degree + 1));
    for (int k = 0; k < deg; ++k) m[rng.next_below(nvars)] += 1;
    terms.push_back({std::move(m), rng.next_rational(5)});
  }
  return Polynomial::from_terms(ring, nvars, std::move(terms));
}

inline Polynomial random_homogeneous(Rng& rng, Ring ring, int nvars, int degree,
                                     int max_terms) {
  std::vector<Term> terms;
  int count = 1 + static_cast<int>(rng.next_below(max_terms));
  for (int t = 0; t < count; ++t) {
    Monomial m(nvars);
    for (int k = 0; k < degree; ++k) m[rng.next_below(nvars)] += 1;
    terms.push_back({std::move(m), rng.next_rational(5)});
  }
  Polynomial p = Polynomial::from_terms(ring, nvars, std::move(terms));
  if (p.is_zero()) {
    Monomial m(nvars);
    m[0] = degree;
    p = Polynomial::monomial(ring, m);
  }
  return p;
}

}  // namespace wildforms::oracle

#endif
