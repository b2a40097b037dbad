#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace atlas {

// Exact scalars. mpq_class arithmetic keeps results reduced with positive
// denominator, but the two-argument constructor does not reduce; build
// rationals from untrusted numerator/denominator pairs via make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline int sign_of(const Rational& x) { return sgn(x); }

inline bool is_integer(const Rational& x) {
  return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()) != 0;
}

// Lowest common multiple of the denominators of a list of rationals; 1 for an
// empty list.
inline Integer denominator_lcm(const std::vector<Rational>& xs) {
  Integer r = 1;
  for (const Rational& x : xs) r = lcm(r, Integer(x.get_den()));
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace atlas
