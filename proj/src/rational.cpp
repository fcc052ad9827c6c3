#include "wildforms/rational.hpp"

#include "wildforms/error.hpp"

namespace wildforms {

Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw FormatError("bad rational literal '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& a) { return a.get_str(); }
std::string to_string(const Integer& a) { return a.get_str(); }

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  return bound == 0 ? 0 : next_u64() % bound;
}

Integer Rng::next_integer(unsigned bits) {
  Integer v = 0;
  unsigned got = 0;
  while (got < bits) {
    unsigned take = bits - got > 32 ? 32 : bits - got;
    v <<= take;
    v += static_cast<unsigned long>(next_u64() & ((1ull << take) - 1));
    got += take;
  }
  if (next_u64() & 1) v = -v;
  return v;
}

Rational Rng::next_rational(unsigned bits) {
  Integer num = next_integer(bits);
  if (is_zero(num)) num = 1;
  Integer den = next_integer(bits);
  if (sgn(den) <= 0) den = 1 - den;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace wildforms
