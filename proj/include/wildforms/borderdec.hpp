#ifndef WILDFORMS_BORDERDEC_HPP
#define WILDFORMS_BORDERDEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "wildforms/groebner.hpp"
#include "wildforms/intpoly.hpp"
#include "wildforms/polynomial.hpp"

namespace wildforms {

// One summand w * L(t)^d of a border rank decomposition. Over Q a scalar
// multiple of a d-th power need not be a d-th power (for even d not even a
// sign change is absorbable), so the weight is explicit; over C it could be
// folded into L. Coefficients of L are integer polynomials in t.
struct WeightedSummand {
  Rational weight;
  std::vector<IntPoly> coeffs;  // one per variable
};

struct BorderDecomposition {
  int shift = 0;   // s
  int degree = 0;  // d
  int nvars = 0;
  std::vector<WeightedSummand> summands;

  // Coordinates of the limiting point [L_j(0)] after stripping the common
  // t-power of the summand.
  std::vector<Rational> limit_point(int j) const;
};

struct VerifyReport {
  bool ok = false;
  int failing_order = -1;        // first t-order violating the definition
  Polynomial residual;           // offending coefficient (minus F at order s)
};

// Build a summand from rational coefficient rows per t-power, clearing
// denominators into the weight.
WeightedSummand make_summand(const Rational& weight,
                             const std::vector<std::vector<Rational>>& coeffs_by_power,
                             int nvars, int degree);

// Expands sum_j w_j L_j(t)^d; valid iff the coefficient of t^k vanishes for
// k < s and the coefficient of t^s equals F.
VerifyReport verify_border_decomposition(const BorderDecomposition& d, const Form& f);

// First-order tangent-cone construction: curves lambda_i (l_i + t c_i m_i)^d
// with c_i = mu_i / (d lambda_i), targeting F = sum_i mu_i l_i^{d-1} m_i.
// Requires sum_i lambda_i l_i^d = 0 with every lambda_i nonzero.
BorderDecomposition construct_tangent_decomposition(const std::vector<Polynomial>& points,
                                                    const std::vector<Polynomial>& tangents,
                                                    const std::vector<Rational>& lambda,
                                                    const std::vector<Rational>& mu,
                                                    int degree);

struct LimitIdealFamily {
  GradedKernelChain chain;   // degreewise orthogonal spans of the limit pieces
  GradedIdeal ideal;         // generated by the limit pieces (minimal generators)
  std::vector<int> hf;       // HF(T/J, k) for k = 0..bound
};

// Graded flat limit of the ideals of a family of moving points; each
// degree-k piece is the t->0 limit of the degree-k piece of the ideal of
// the points over Q(t).
LimitIdealFamily limit_ideal_family(const VariableSet& vars,
                                    const std::vector<std::vector<IntPoly>>& moving_points,
                                    int degree_bound);

struct LimitingSchemeResult {
  GradedIdeal unsaturated;
  GradedIdeal saturated;
  int length = 0;
  bool length_matches_summands = false;
  bool contained_in_annihilator = false;  // unsaturated ideal inside Ann(F)
  std::vector<std::vector<Rational>> support;
  std::vector<int> hf_unsaturated;
};

// Saturated limit ideal of the point family underlying a decomposition,
// plus the containment check of the unsaturated limit ideal in Ann(F).
// Default degree bound: summand count + 1.
LimitingSchemeResult limiting_scheme_ideal(const BorderDecomposition& d, const Form& f,
                                           std::optional<int> degree_bound = std::nullopt);

std::string decomposition_to_json(const BorderDecomposition& d);
BorderDecomposition decomposition_from_json(const std::string& text);

}  // namespace wildforms

#endif
