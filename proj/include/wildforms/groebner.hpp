#ifndef WILDFORMS_GROEBNER_HPP
#define WILDFORMS_GROEBNER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "wildforms/matrix.hpp"
#include "wildforms/polynomial.hpp"

namespace wildforms {

// Reduced Groebner basis: monic elements, no term of any element divisible
// by another element's leading term. When degree_bound is set the basis is
// only valid up to that degree (homogeneous inputs only).
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leading;
  std::optional<int> degree_bound;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::optional<int> degree_bound = std::nullopt);

// Remainder of full multivariate division by the basis; zero iff f lies in
// the ideal (for complete bases; for truncated bases valid up to the bound).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Homogeneous ideal in the dual ring T with lazily cached bases.
class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(VariableSet vars, std::vector<Polynomial> gens);

  const VariableSet& vars() const { return vars_; }
  int nvars() const { return vars_.count(); }
  const std::vector<Polynomial>& gens() const { return gens_; }

  // Full basis for the order (cached).
  const GroebnerBasis& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  // Basis valid up to `degree`; may return a deeper cached basis.
  const GroebnerBasis& truncated_basis(int degree) const;

  bool contains(const Polynomial& f) const;

 private:
  VariableSet vars_;
  std::vector<Polynomial> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b);

// dim (T/I)_k = number of degree-k standard monomials.
int hf_of_ideal(const GradedIdeal& ideal, int k);

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal colon_ideal(const GradedIdeal& ideal, const Polynomial& f);
// I : f^infinity via the auxiliary-variable elimination model.
GradedIdeal saturate_by(const GradedIdeal& ideal, const Polynomial& f);
// Saturation at the irrelevant ideal: intersection of the per-variable
// saturations.
GradedIdeal saturation(const GradedIdeal& ideal);

bool contains_linear_form(const GradedIdeal& ideal);
bool is_saturated(const GradedIdeal& ideal);

// Saturated radical ideal of distinct points, via degreewise evaluation
// kernels and minimal generator extraction.
GradedIdeal ideal_of_points(const VariableSet& vars,
                            const std::vector<std::vector<Rational>>& points);

// Degreewise description of a graded subspace chain I_k given by the
// orthogonal complements of small "evaluation span" matrices; shared by
// ideal_of_points and the flat-limit pipeline. Rows of spans[k] span the
// orthogonal complement of I_k inside the degree-k coefficient space.
struct GradedKernelChain {
  int nvars = 0;
  int max_degree = 0;
  std::vector<Matrix<Rational>> spans;  // index k = 0..max_degree
};

// Minimal generators of the ideal generated by the chain pieces, assuming
// the chain is multiplication-compatible (T_1 * I_{k-1} inside I_k).
std::vector<Polynomial> minimal_generators_from_chain(const GradedKernelChain& chain);

}  // namespace wildforms

#endif
