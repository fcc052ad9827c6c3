#ifndef WILDFORMS_TENSOR_HPP
#define WILDFORMS_TENSOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildforms/finite_algebra.hpp"

namespace wildforms {

// Dense d-way array of rationals over a single m-dimensional space.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int ways, int dim);

  int ways() const { return ways_; }
  int dim() const { return dim_; }
  const Rational& at(const std::vector<int>& idx) const { return a_[offset(idx)]; }
  Rational& at(const std::vector<int>& idx) { return a_[offset(idx)]; }

  bool is_symmetric() const;
  // Contract the first slot with a covector.
  Tensor contract_first(const std::vector<Rational>& v) const;
  // Apply a basis-change matrix to one slot: new[..i..] = sum_j B[i][j] old[..j..].
  Tensor mode_apply(int slot, const Matrix<Rational>& b) const;
  bool operator==(const Tensor& o) const {
    return ways_ == o.ways_ && dim_ == o.dim_ && a_ == o.a_;
  }

 private:
  std::size_t offset(const std::vector<int>& idx) const;
  int ways_ = 0, dim_ = 0;
  std::vector<Rational> a_;
};

// d-way structure tensor: entry (i_1, ..., i_{d-1}, k) = coefficient of a_k
// in a_{i_1} ... a_{i_{d-1}}; symmetric in the first d-1 slots.
Tensor structure_tensor(const FiniteAlgebra& a, int d);

// The symmetric tensor with F(x) = sum T[i_1...i_d] x_{i_1} ... x_{i_d}.
Tensor tensor_of_form(const Form& f);
Form form_of_tensor(const Tensor& t);

// Fully symmetric tensor e(a_{i_1} ... a_{i_d}) from a Gorenstein pairing.
Tensor symmetrize_structure_tensor(const FiniteAlgebra& a, const GorensteinWitness& w,
                                   int d);

struct MultMatrixReport {
  struct Failure {
    std::string identity;
    std::vector<int> indices;
  };
  bool commutativity = true;
  bool closure = true;
  bool structure = true;
  bool strassen = true;
  std::vector<Failure> failures;
  bool all_pass() const { return commutativity && closure && structure && strassen; }
  std::string str() const;
};

// Checks the defining identities of a structure tensor on M_i = T^{0...0,*,i,*}.
// Requires the normalization T^{0...0,k,l} = delta_{kl}.
MultMatrixReport verify_multiplication_matrices(const Tensor& t);

// Functional ell with det T_F(ell^{d-2}) != 0, i.e. a rational point where
// the Hessian determinant does not vanish.
std::optional<std::vector<Rational>> hessian_witness(const Form& f, std::uint64_t seed = 0);

struct ReconstructedAlgebra {
  FiniteAlgebra algebra;
  Matrix<Rational> basis;       // rows: v_i in the original coordinates
  Matrix<Rational> dual_basis;  // rows: v'_j with T(ell^{d-2}, v_i, v'_j) = delta
  Tensor normalized;            // T^{i_1...i_d}
  MultMatrixReport report;
};

// Reconstruction of the algebra whose structure tensor is T_F, given a
// functional with full-rank contraction. Throws IdentityFailure when the
// multiplication-matrix identities do not hold (non-minimal border rank
// inputs).
ReconstructedAlgebra algebra_from_tensor(const Tensor& tf, const std::vector<Rational>& ell);

std::string tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const std::string& text);

}  // namespace wildforms

#endif
