#ifndef WILDFORMS_RATIONAL_HPP
#define WILDFORMS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wildforms {

// Exact scalars. mpq_class is kept canonical (reduced, positive denominator)
// by GMP itself; helpers below cover the parsing/printing and sampling needs.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& a);
std::string to_string(const Integer& a);

// Deterministic splittable PRNG (splitmix64) so seeded runs are reproducible
// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);
  // Signed integer with |value| < 2^bits.
  Integer next_integer(unsigned bits);
  // Nonzero rational with numerator/denominator below 2^bits.
  Rational next_rational(unsigned bits);

 private:
  std::uint64_t state_;
};

}  // namespace wildforms

#endif
