#ifndef WILDFORMS_MONOMIAL_HPP
#define WILDFORMS_MONOMIAL_HPP

#include <vector>

namespace wildforms {

// Dense exponent vector; the variable count is fixed by context.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Componentwise difference; caller guarantees divisibility.
  Monomial quotient_by(const Monomial& o) const;
  Monomial lcm_with(const Monomial& o) const;
  bool is_coprime_with(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<int> e_;
};

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, ElimBlock };
  Kind kind = Kind::Grevlex;
  int block = 0;  // ElimBlock: the first `block` variables get eliminated

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elim(int block) { return {Kind::ElimBlock, block}; }
};

// Positive when a > b under the order.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace wildforms

#endif
