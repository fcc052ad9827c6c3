#ifndef WILDFORMS_TESTS_ALGEBRA_HELPERS_HPP
#define WILDFORMS_TESTS_ALGEBRA_HELPERS_HPP

#include <string>
#include <vector>

#include "wildforms/finite_algebra.hpp"
#include "wildforms/parser.hpp"

namespace wildforms::testhelp {

// Random graded local algebra: quotient of a small polynomial ring by a
// monomial ideal containing powers of every variable. Basis sorted by
// degree with the unit first.
inline FiniteAlgebra random_monomial_algebra(Rng& rng, int max_vars = 3) {
  const int v = 1 + static_cast<int>(rng.next_below(max_vars));
  std::vector<int> caps(v);
  for (auto& c : caps) c = 1 + static_cast<int>(rng.next_below(3));
  std::vector<Monomial> extra;
  int extras = static_cast<int>(rng.next_below(3));
  for (int e = 0; e < extras; ++e) {
    Monomial m(v);
    int deg = 2 + static_cast<int>(rng.next_below(2));
    for (int k = 0; k < deg; ++k) m[rng.next_below(v)] += 1;
    extra.push_back(std::move(m));
  }
  auto in_ideal = [&](const Monomial& m) {
    for (int i = 0; i < v; ++i)
      if (m[i] >= caps[i]) return true;
    for (const auto& g : extra)
      if (g.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> basis;
  int degree_cap = 0;
  for (int c : caps) degree_cap += c;
  for (int k = 0; k <= degree_cap; ++k)
    for (const auto& m : monomial_basis(v, k))
      if (!in_ideal(m)) basis.push_back(m);
  const int dim = static_cast<int>(basis.size());
  auto index_of = [&](const Monomial& m) {
    for (int i = 0; i < dim; ++i)
      if (basis[i] == m) return i;
    return -1;
  };
  VariableSet vars = VariableSet::standard(v);
  std::vector<std::string> labels;
  for (const auto& m : basis) labels.push_back(print_monomial(m, Ring::Dual, vars));
  std::vector<std::vector<std::vector<Rational>>> table(
      dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Monomial prod = basis[i] * basis[j];
      if (!in_ideal(prod)) table[i][j][index_of(prod)] = 1;
    }
  return FiniteAlgebra::from_table(std::move(labels), std::move(table));
}

}  // namespace wildforms::testhelp

#endif
