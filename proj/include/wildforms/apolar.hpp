#ifndef WILDFORMS_APOLAR_HPP
#define WILDFORMS_APOLAR_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wildforms/borderdec.hpp"
#include "wildforms/groebner.hpp"
#include "wildforms/matrix.hpp"
#include "wildforms/polynomial.hpp"

namespace wildforms {

// Matrix of h -> h o F from degree-i dual forms to degree d-i forms.
// Rows indexed by row_basis (primal monomials of degree d-i), columns by
// col_basis (dual monomials of degree i); entry (m, m') = coefficient of m
// in m' o F. The right kernel is Ann(F)_i.
struct Catalecticant {
  int source_degree = 0;
  int target_degree = 0;
  std::vector<Monomial> row_basis;
  std::vector<Monomial> col_basis;
  Matrix<Rational> matrix;
  int rank_value = 0;
};

Catalecticant catalecticant(const Form& f, int i);

// Basis of Ann(F)_k; all of T_k when k > deg F.
std::vector<Polynomial> annihilator_component(const Form& f, int k);

// Minimal generators of Ann(F), extracted degree by degree.
GradedIdeal annihilator_generators(const Form& f,
                                   const std::optional<VariableSet>& vars = std::nullopt);

struct HilbertFunctionTable {
  std::vector<int> values;  // index k = 0..d
  int max_value() const;
  bool symmetric() const;
};

HilbertFunctionTable hilbert_function(const Form& f);
bool is_concise(const Form& f);
// max_k HF(k): lower bound for border rank and cactus rank.
int rank_lower_bound(const Form& f);

struct HessianOptions {
  bool exact = false;
  std::uint64_t seed = 0;
  int samples = 3;
  unsigned coeff_bits = 64;
};

struct HessianStatus {
  bool vanishes = false;
  bool exact = false;
  int matrix_size = 0;
  // When the verdict "vanishes" is probabilistic: failure probability is at
  // most 2^log2_failure_bound.
  std::optional<double> log2_failure_bound;
  // A rational point with nonzero determinant certifies non-vanishing.
  std::optional<std::vector<Rational>> witness_point;
  std::optional<Polynomial> determinant;  // exact mode, small matrices only
};

// Determinant of the matrix of second partials.
HessianStatus hessian_vanishes(const Form& f, const HessianOptions& opts = {});
// Hess^k with respect to the degree-lex monomial basis of (T/Ann F)_k.
HessianStatus higher_hessian_vanishes(const Form& f, int k, const HessianOptions& opts = {});

struct SlpResult {
  bool has_slp = false;
  std::vector<HessianStatus> by_k;  // k = 1..floor(d/2)
};
SlpResult has_slp(const Form& f, const HessianOptions& opts = {});

// Jacobian-criterion test in characteristic zero.
bool algebraically_independent(const std::vector<Polynomial>& forms, std::uint64_t seed = 0);

enum class NotApplicableReason { NotConcise, NonMinimalBorderRank };

// Either a verified border decomposition of length dim V or the explicit
// assumption that F has minimal border rank.
struct MinimalBorderRankCertificate {
  std::optional<BorderDecomposition> decomposition;
  static MinimalBorderRankCertificate assumed() { return {}; }
  static MinimalBorderRankCertificate verified(BorderDecomposition d) {
    return {std::move(d)};
  }
};

struct WildnessVerdict {
  enum class Kind { Wild, NotWild, NotApplicable };
  Kind kind = Kind::NotApplicable;
  std::optional<NotApplicableReason> reason;
  HilbertFunctionTable hf;
  int lower_bound = 0;
  std::optional<HessianStatus> hessian;
  std::string certificate;        // "assumed-minimal" or "verified-decomposition(r)"
  std::string rank_conclusions;   // consequences recorded with the verdict
};

WildnessVerdict classify_wild(const Form& f, const MinimalBorderRankCertificate& cert,
                              const HessianOptions& opts = {});

std::string to_string(WildnessVerdict::Kind k);
std::string to_string(NotApplicableReason r);

}  // namespace wildforms

#endif
