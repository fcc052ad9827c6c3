#include "wildforms/monomial.hpp"

#include <algorithm>

namespace wildforms {

int Monomial::degree() const {
  int d = 0;
  for (int x : e_) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Monomial Monomial::lcm_with(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = std::max(m.e_[i], o.e_[i]);
  return m;
}

bool Monomial::is_coprime_with(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

namespace {

int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff > 0 ? -1 : 1;  // reverse: smaller last exponent wins
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::Grevlex:
      return cmp_grevlex(a, b, 0, a.nvars());
    case MonomialOrder::Kind::Lex:
      return cmp_lex(a, b);
    case MonomialOrder::Kind::ElimBlock: {
      int c = cmp_grevlex(a, b, 0, order.block);
      if (c != 0) return c;
      return cmp_grevlex(a, b, order.block, a.nvars());
    }
  }
  return 0;
}

}  // namespace wildforms
