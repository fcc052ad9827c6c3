#ifndef WILDFORMS_INTPOLY_HPP
#define WILDFORMS_INTPOLY_HPP

#include <string>
#include <vector>

#include "wildforms/rational.hpp"

namespace wildforms {

// Dense univariate polynomial in the deformation parameter t, integer
// coefficients, no trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(Integer constant);  // NOLINT: implicit by design
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly t(unsigned power = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Largest k with t^k dividing the polynomial; 0 for the zero polynomial.
  int valuation() const;
  const Integer& coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  Integer content() const;        // gcd of coefficients, sign of leading coeff
  IntPoly primitive_part() const;
  Integer leading() const;
  Integer eval_zero() const { return c_.empty() ? Integer(0) : c_[0]; }
  Rational eval(const Rational& x) const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // Exact division; throws if the remainder is nonzero.
  IntPoly divexact(const IntPoly& d) const;
  IntPoly shifted(int by) const;  // multiply by t^by (by >= 0)

  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Primitive gcd in Z[t], positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace wildforms

#endif
