#ifndef WILDFORMS_POLYNOMIAL_HPP
#define WILDFORMS_POLYNOMIAL_HPP

#include <optional>
#include <vector>

#include "wildforms/monomial.hpp"
#include "wildforms/rational.hpp"
#include "wildforms/variables.hpp"

namespace wildforms {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Multivariate polynomial over Q with a ring tag. Terms are kept sorted in
// descending grevlex order with nonzero coefficients; this makes the
// representation canonical, so operator== is structural.
class Polynomial {
 public:
  Polynomial() : ring_(Ring::Primal), nvars_(0) {}
  Polynomial(Ring ring, int nvars) : ring_(ring), nvars_(nvars) {}
  static Polynomial from_terms(Ring ring, int nvars, std::vector<Term> terms);
  static Polynomial monomial(Ring ring, Monomial m, Rational c = Rational(1));
  static Polynomial variable(Ring ring, int nvars, int index);
  static Polynomial constant(Ring ring, int nvars, const Rational& c);

  Ring ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rational coeff_of(const Monomial& m) const;
  // Index of the largest term under `order`.
  int leading_index(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(int var) const;
  Rational eval(const std::vector<Rational>& point) const;
  // Divide by the gcd of coefficients and make the grevlex-leading
  // coefficient positive (used to normalize ideal generators).
  Polynomial primitive_scaled() const;
  // Restrict the ring tag (same terms, other ring).
  Polynomial with_ring(Ring ring) const;

 private:
  Ring ring_;
  int nvars_;
  std::vector<Term> terms_;
};

// Differential apolarity action: every dual variable y_i acts on the primal
// ring as d/dx_i. Throws RingMismatch unless h is dual and f primal with the
// same variable count.
Polynomial apply_dual(const Polynomial& h, const Polynomial& f);

// All monomials of degree k in the allowed variables (all when unset),
// sorted descending under `order`.
std::vector<Monomial> monomial_basis(int nvars, int k,
                                     const std::optional<std::vector<int>>& allowed = std::nullopt,
                                     const MonomialOrder& order = MonomialOrder::grevlex());

// Exact determinant of a square polynomial matrix (Laplace expansion with
// column-subset memoization; sizes up to 14).
Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m);

// Coefficient vector of p on a monomial basis (entries aligned with basis).
std::vector<Rational> coeff_row(const Polynomial& p, const std::vector<Monomial>& basis);
Polynomial from_coeff_row(Ring ring, int nvars, const std::vector<Monomial>& basis,
                          const std::vector<Rational>& coeffs);

// Homogeneous form of degree >= 1 in the primal ring.
class Form {
 public:
  explicit Form(Polynomial p);
  const Polynomial& poly() const { return poly_; }
  int degree() const { return degree_; }
  int nvars() const { return poly_.nvars(); }
  bool operator==(const Form& o) const { return poly_ == o.poly_; }

 private:
  Polynomial poly_;
  int degree_;
};

}  // namespace wildforms

#endif
