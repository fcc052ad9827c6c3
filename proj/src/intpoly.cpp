#include "wildforms/intpoly.hpp"

#include <sstream>

#include "wildforms/error.hpp"

namespace wildforms {

IntPoly::IntPoly(Integer constant) {
  if (!wildforms::is_zero(constant)) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::t(unsigned power) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && wildforms::is_zero(c_.back())) c_.pop_back();
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!wildforms::is_zero(c_[i])) return static_cast<int>(i);
  return 0;
}

const Integer& IntPoly::coeff(int k) const {
  static const Integer zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

Integer IntPoly::content() const {
  Integer g(0);
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (!c_.empty() && sgn(c_.back()) < 0) g = -g;
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  std::vector<Integer> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPoly(std::move(out));
}

Integer IntPoly::leading() const { return c_.empty() ? Integer(0) : c_.back(); }

Rational IntPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw Error("IntPoly division by zero");
  if (is_zero()) return {};
  // Division over Q, then check integrality and zero remainder.
  std::vector<Rational> rem(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
  int dr = static_cast<int>(rem.size()) - 1;
  int dd = d.degree();
  if (dr < dd) throw Error("IntPoly divexact: degree mismatch");
  std::vector<Rational> quo(dr - dd + 1, Rational(0));
  Rational lead(d.leading());
  for (int k = dr - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / lead;
    quo[k] = q;
    if (!wildforms::is_zero(q))
      for (int j = 0; j <= dd; ++j) rem[k + j] -= q * Rational(d.coeff(j));
  }
  for (const auto& r : rem)
    if (!wildforms::is_zero(r)) throw Error("IntPoly divexact: nonzero remainder");
  std::vector<Integer> out(quo.size());
  for (std::size_t i = 0; i < quo.size(); ++i) {
    if (quo[i].get_den() != 1) throw Error("IntPoly divexact: non-integer quotient");
    out[i] = quo[i].get_num();
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int by) const {
  if (is_zero() || by == 0) return by == 0 ? *this : IntPoly{};
  std::vector<Integer> out(c_.size() + by, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + by] = c_[i];
  return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& a = coeff(k);
    if (wildforms::is_zero(a)) continue;
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    first = false;
    Integer mag = abs(a);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  // Euclid over Q on primitive parts; result returned primitive.
  if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  std::vector<Rational> f, g;
  for (const auto& x : a.coeffs()) f.emplace_back(x);
  for (const auto& x : b.coeffs()) g.emplace_back(x);
  auto deg = [](const std::vector<Rational>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && wildforms::is_zero(p[d])) --d;
    return d;
  };
  while (true) {
    int dg = deg(g);
    if (dg < 0) break;
    int df = deg(f);
    if (df < dg) {
      std::swap(f, g);
      continue;
    }
    // f -= (lf/lg) t^(df-dg) g
    Rational q = f[df] / g[dg];
    for (int j = 0; j <= dg; ++j) f[df - dg + j] -= q * g[j];
    f[df] = 0;
  }
  int df = deg(f);
  if (df < 0) return IntPoly(Integer(1));
  // Clear denominators and primitivize.
  Integer lcm_den(1);
  for (int i = 0; i <= df; ++i)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), f[i].get_den().get_mpz_t());
  std::vector<Integer> out(df + 1);
  for (int i = 0; i <= df; ++i) {
    Rational scaled = f[i] * Rational(lcm_den);
    out[i] = scaled.get_num();
  }
  return IntPoly(std::move(out)).primitive_part();
}

}  // namespace wildforms
