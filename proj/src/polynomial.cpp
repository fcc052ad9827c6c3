#include "wildforms/polynomial.hpp"

#include <algorithm>
#include <map>

#include "wildforms/error.hpp"

namespace wildforms {

namespace {

struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::grevlex()) > 0;
  }
};

Rational rational_pow(const Rational& x, unsigned k) {
  Rational r(1);
  Rational base = x;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

}  // namespace

Polynomial Polynomial::from_terms(Ring ring, int nvars, std::vector<Term> terms) {
  std::map<Monomial, Rational, GrevlexDesc> acc;
  for (auto& t : terms) {
    if (wildforms::is_zero(t.coeff)) continue;
    auto [it, inserted] = acc.emplace(std::move(t.mono), t.coeff);
    if (!inserted) {
      it->second += t.coeff;
      if (wildforms::is_zero(it->second)) acc.erase(it);
    }
  }
  Polynomial p(ring, nvars);
  for (auto& [m, c] : acc) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational c) {
  Polynomial p(ring, m.nvars());
  if (!wildforms::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(Ring ring, int nvars, int index) {
  Monomial m(nvars);
  m[index] = 1;
  return monomial(ring, m);
}

Polynomial Polynomial::constant(Ring ring, int nvars, const Rational& c) {
  return monomial(ring, Monomial(nvars), c);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Rational Polynomial::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

int Polynomial::leading_index(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  if (order.kind == MonomialOrder::Kind::Grevlex) return 0;
  int best = 0;
  for (int i = 1; i < term_count(); ++i)
    if (compare(terms_[i].mono, terms_[best].mono, order) > 0) best = i;
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_)
    throw RingMismatch("polynomial addition across rings");
  Polynomial p(ring_, nvars_);
  GrevlexDesc less;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && less(terms_[i].mono, o.terms_[j].mono))) {
      p.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || less(o.terms_[j].mono, terms_[i].mono)) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (!wildforms::is_zero(c)) p.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_)
    throw RingMismatch("polynomial product across rings");
  std::map<Monomial, Rational, GrevlexDesc> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      Rational c = a.coeff * b.coeff;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (wildforms::is_zero(it->second)) acc.erase(it);
      }
    }
  Polynomial p(ring_, nvars_);
  for (auto& [m, c] : acc) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (wildforms::is_zero(c)) return Polynomial(ring_, nvars_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, nvars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial p(ring_, nvars_);
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Term d;
    d.mono = t.mono;
    d.mono[var] = e - 1;
    d.coeff = t.coeff * Rational(e);
    p.terms_.push_back(std::move(d));
  }
  return from_terms(ring_, nvars_, std::move(p.terms_));
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  Rational out(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i] > 0) v *= rational_pow(point[i], t.mono[i]);
    out += v;
  }
  return out;
}

Polynomial Polynomial::primitive_scaled() const {
  if (terms_.empty()) return *this;
  Integer num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(terms_.front().coeff) < 0) scale = -scale;
  return *this * scale;
}

Polynomial Polynomial::with_ring(Ring ring) const {
  Polynomial p = *this;
  p.ring_ = ring;
  return p;
}

Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw Error("empty determinant");
  if (n > 14) throw Error("exact determinant too large");
  const Ring ring = m[0][0].ring();
  const int nv = m[0][0].nvars();
  // Laplace expansion over column subsets, one row per popcount level.
  std::vector<Polynomial> memo(std::size_t(1) << n);
  memo[0] = Polynomial::constant(ring, nv, Rational(1));
  for (unsigned mask = 1; mask < memo.size(); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    Polynomial acc(ring, nv);
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& entry = m[row][c];
      if (!entry.is_zero()) {
        Polynomial sub = memo[mask & ~(1u << c)] * entry;
        acc = ((row + pos) % 2 == 0) ? acc + sub : acc - sub;
      }
      ++pos;
    }
    memo[mask] = std::move(acc);
  }
  return memo.back();
}

Polynomial apply_dual(const Polynomial& h, const Polynomial& f) {
  if (h.ring() != Ring::Dual) throw RingMismatch("operator must be dual");
  if (f.ring() != Ring::Primal) throw RingMismatch("operand must be primal");
  if (h.nvars() != f.nvars()) throw RingMismatch("variable count mismatch");
  std::vector<Term> acc;
  for (const auto& a : h.terms())
    for (const auto& b : f.terms()) {
      if (!a.mono.divides(b.mono)) continue;
      Rational c = a.coeff * b.coeff;
      Monomial m = b.mono;
      for (int i = 0; i < f.nvars(); ++i)
        for (int k = 0; k < a.mono[i]; ++k) {
          c *= Rational(m[i]);
          m[i] -= 1;
        }
      acc.push_back({std::move(m), std::move(c)});
    }
  return Polynomial::from_terms(Ring::Primal, f.nvars(), std::move(acc));
}

namespace {

void enumerate_monomials(int nvars, int k, const std::vector<int>& allowed, std::size_t pos,
                         Monomial& current, std::vector<Monomial>& out) {
  if (pos + 1 == allowed.size()) {
    current[allowed[pos]] = k;
    out.push_back(current);
    current[allowed[pos]] = 0;
    return;
  }
  for (int e = k; e >= 0; --e) {
    current[allowed[pos]] = e;
    enumerate_monomials(nvars, k - e, allowed, pos + 1, current, out);
  }
  current[allowed[pos]] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int k,
                                     const std::optional<std::vector<int>>& allowed,
                                     const MonomialOrder& order) {
  if (k < 0) throw KOutOfRange("negative degree");
  std::vector<int> vars;
  if (allowed) {
    vars = *allowed;
  } else {
    vars.resize(nvars);
    for (int i = 0; i < nvars; ++i) vars[i] = i;
  }
  std::vector<Monomial> out;
  if (vars.empty()) {
    if (k == 0) out.emplace_back(nvars);
    return out;
  }
  Monomial current(nvars);
  enumerate_monomials(nvars, k, vars, 0, current, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, order) > 0;
  });
  return out;
}

std::vector<Rational> coeff_row(const Polynomial& p, const std::vector<Monomial>& basis) {
  std::vector<Rational> row(basis.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) row[j] = p.coeff_of(basis[j]);
  return row;
}

Polynomial from_coeff_row(Ring ring, int nvars, const std::vector<Monomial>& basis,
                          const std::vector<Rational>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!is_zero(coeffs[j])) terms.push_back({basis[j], coeffs[j]});
  return Polynomial::from_terms(ring, nvars, std::move(terms));
}

Form::Form(Polynomial p) : poly_(std::move(p)) {
  if (poly_.ring() != Ring::Primal) throw RingMismatch("forms live in the primal ring");
  if (poly_.is_zero()) throw Error("forms are nonzero");
  if (!poly_.is_homogeneous()) throw Error("forms are homogeneous");
  degree_ = poly_.degree();
  if (degree_ < 1) throw DegreeTooSmall("forms have degree >= 1");
}

}  // namespace wildforms
