#ifndef WILDFORMS_FINITE_ALGEBRA_HPP
#define WILDFORMS_FINITE_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildforms/apolar.hpp"
#include "wildforms/matrix.hpp"
#include "wildforms/polynomial.hpp"

namespace wildforms {

// Commutative associative unital algebra over Q given by structure
// constants on a basis a_0, ..., a_{m-1} with a_0 = 1. The defining laws
// are checked at construction.
class FiniteAlgebra {
 public:
  static FiniteAlgebra from_table(std::vector<std::string> labels,
                                  std::vector<std::vector<std::vector<Rational>>> table);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Coefficients of a_i * a_j on the basis.
  const std::vector<Rational>& product(int i, int j) const { return table_[i][j]; }
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  // Matrix of multiplication by the vector a.
  Matrix<Rational> mult_matrix(const std::vector<Rational>& a) const;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<Rational>>> table_;
};

// T/Ann(F) on the standard-monomial basis of the grevlex basis of Ann(F);
// basis sorted by degree, unit first.
FiniteAlgebra apolar_algebra(const Form& f);
// Q^m with the componentwise product, basis adapted so a_0 = (1,...,1).
FiniteAlgebra diagonal_algebra(int m);
// Q[y]/(y^k), basis 1, y, ..., y^{k-1}.
FiniteAlgebra jet_algebra(int k);
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct GorensteinWitness {
  std::vector<Rational> functional;  // e on the basis
  Matrix<Rational> pairing;          // p(a_i, a_j) = e(a_i a_j)
};

// A witness iff the generic pairing determinant is nonzero. Witness search
// tries the reversed-basis coordinate functionals then seeded random ones;
// the negative answer is decided symbolically (dim <= 8) or by socle
// dimension for graded-local tables.
std::optional<GorensteinWitness> is_gorenstein(const FiniteAlgebra& a,
                                               std::uint64_t seed = 0);

// Kernel of multiplication by the given ideal; the span must be an ideal of
// codimension one.
std::vector<std::vector<Rational>> socle(const FiniteAlgebra& a,
                                         const std::vector<std::vector<Rational>>& max_ideal);
// Convenience for graded tables whose non-unit basis vectors span the
// irrelevant maximal ideal.
int socle_dimension_graded(const FiniteAlgebra& a);

std::string algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const std::string& text);

}  // namespace wildforms

#endif
