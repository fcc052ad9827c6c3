#include "wildforms/ratfunc.hpp"

#include "wildforms/error.hpp"

namespace wildforms {

RatFunc::RatFunc(const Rational& v)
    : num_(Integer(v.get_num())), den_(Integer(v.get_den())) {}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = IntPoly(Integer(1));
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  Integer cn = num_.content();
  Integer cd = den_.content();
  Integer cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den_.leading()) < 0) cg = -cg;
  if (cg != 1) {
    num_ = num_.divexact(IntPoly(cg));
    den_ = den_.divexact(IntPoly(cg));
  }
}

Rational RatFunc::eval_zero() const {
  if (num_.is_zero()) return Rational(0);
  if (den_.valuation() > 0) throw Error("RatFunc: pole at t = 0");
  if (num_.valuation() > 0) return Rational(0);
  Rational v(num_.eval_zero(), den_.eval_zero());
  v.canonicalize();
  return v;
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (wildforms::is_zero(d)) throw Error("RatFunc: pole at sample point");
  Rational out = num_.eval(x) / d;
  out.canonicalize();
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
  if (den_ == IntPoly(Integer(1))) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.degree() > 0) n = "(" + n + ")";
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace wildforms
