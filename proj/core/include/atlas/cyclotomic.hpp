#pragma once

#include <cassert>
#include <vector>

#include "atlas/rational.hpp"

namespace atlas {

// Integer coefficients of the N-th cyclotomic polynomial, constant term
// first.  Cached; safe to call from several threads.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

// An element of the real subfield of Q(zeta_N), zeta_N = exp(2*pi*i/N),
// stored as a polynomial in zeta_N reduced modulo the N-th cyclotomic
// polynomial.  The power basis makes the representation unique for a fixed
// conductor, so the zero test is a coefficient test.  Every constructor and
// operation preserves the invariant that the value is fixed by complex
// conjugation, i.e. real.
class RealCyclotomic {
 public:
  RealCyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  RealCyclotomic(const Rational& x) : conductor_(1), coeffs_(1, x) {}
  RealCyclotomic(long x) : conductor_(1), coeffs_(1, Rational(x)) {}
  RealCyclotomic(int x) : conductor_(1), coeffs_(1, Rational(x)) {}

  // cos(2*pi*r) for reduced r, as (zeta^a + zeta^(-a))/2 in conductor den(r).
  static RealCyclotomic cos_turn(const Rational& r);
  static RealCyclotomic sqrt2();  // zeta_8 + zeta_8^-1
  static RealCyclotomic sqrt3();  // zeta_12 + zeta_12^-1

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;    // all coefficients beyond the constant vanish
  Rational rational() const;   // requires is_rational()

  RealCyclotomic operator-() const;
  RealCyclotomic& operator+=(const RealCyclotomic& o);
  RealCyclotomic& operator-=(const RealCyclotomic& o);
  RealCyclotomic& operator*=(const RealCyclotomic& o);
  friend RealCyclotomic operator+(RealCyclotomic a, const RealCyclotomic& b) { return a += b; }
  friend RealCyclotomic operator-(RealCyclotomic a, const RealCyclotomic& b) { return a -= b; }
  friend RealCyclotomic operator*(RealCyclotomic a, const RealCyclotomic& b) { return a *= b; }

  // Multiplicative inverse of a nonzero element, via the extended Euclidean
  // algorithm in Q[x] modulo the conductor's cyclotomic polynomial.
  RealCyclotomic inverse() const;
  friend RealCyclotomic operator/(const RealCyclotomic& a, const RealCyclotomic& b) {
    return a * b.inverse();
  }

  friend bool operator==(const RealCyclotomic& a, const RealCyclotomic& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const RealCyclotomic& a, const RealCyclotomic& b) { return !(a == b); }

 private:
  RealCyclotomic(unsigned conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  // Rewrites the element in the larger conductor m (conductor_ must divide m).
  RealCyclotomic lifted(unsigned m) const;

  unsigned conductor_;             // N
  std::vector<Rational> coeffs_;   // degree < phi(N), basis 1, zeta, zeta^2, ...
};

// Exact sign: 0 iff the element is zero (coefficient test); otherwise the
// sign certified by adaptive-precision interval evaluation, doubling the
// working precision from 64 bits until the enclosure excludes zero.
int sign_of(const RealCyclotomic& x);

// Decimal approximation accurate to the given number of bits, for diagnostics
// and tests; never used by library decisions.
std::string approx_string(const RealCyclotomic& x, unsigned bits = 128);

}  // namespace atlas
