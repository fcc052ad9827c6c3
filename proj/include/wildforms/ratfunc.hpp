#ifndef WILDFORMS_RATFUNC_HPP
#define WILDFORMS_RATFUNC_HPP

#include <string>

#include "wildforms/intpoly.hpp"

namespace wildforms {

// Element of Q(t) as a reduced fraction of integer polynomials. Canonical
// form: gcd(num, den) = 1 including integer content, den has positive leading
// coefficient. Equality of canonical forms is structural equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Integer(1)) {}
  RatFunc(int v) : RatFunc(Rational(v)) {}  // NOLINT
  RatFunc(const Rational& v);               // NOLINT
  RatFunc(IntPoly num, IntPoly den);
  static RatFunc t() { return RatFunc(IntPoly::t(), IntPoly(Integer(1))); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // t-adic valuation; 0 for the zero element by convention.
  int valuation() const { return num_.valuation() - den_.valuation(); }
  // Value at t = 0. Requires valuation() >= 0 (no pole).
  Rational eval_zero() const;
  Rational eval(const Rational& x) const;  // throws on pole

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string str() const;

 private:
  void reduce();
  IntPoly num_, den_;
};

inline bool is_zero(const RatFunc& a) { return a.is_zero(); }

}  // namespace wildforms

#endif
