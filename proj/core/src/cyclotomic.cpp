#include "atlas/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace atlas {
namespace {

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Quotient of exact polynomial division over Z, constant term first.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
  assert(!den.empty() && den.back() != 0);
  assert(num.size() >= den.size());
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Integer c = num[i + den.size() - 1];
    assert(c % den.back() == 0);
    c /= den.back();
    quot[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Integer& c : num) {
    assert(c == 0);
    (void)c;
  }
  return quot;
}

// In-place reduction modulo a monic integer polynomial.
void poly_mod(std::vector<Rational>& p, const std::vector<Integer>& m) {
  const size_t deg = m.size() - 1;
  assert(m.back() == 1);
  while (p.size() > deg) {
    Rational c = p.back();
    p.pop_back();
    if (c == 0) continue;
    const size_t base = p.size() - deg;
    for (size_t j = 0; j < deg; ++j) p[base + j] -= c * Rational(m[j]);
  }
  p.resize(deg, Rational(0));
}

std::vector<Rational> poly_trim(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// (quotient, remainder) of division in Q[x].
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
  assert(!den.empty());
  if (num.size() < den.size()) return {{}, std::move(num)};
  std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Rational c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return {std::move(quot), poly_trim(std::move(num))};
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  assert(n >= 1);
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  // Fill every divisor level bottom-up so each entry only needs previous ones.
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m || cache.count(m)) continue;
    // x^m - 1 divided by the product of all lower-level cyclotomic factors.
    std::vector<Integer> num(m + 1, Integer(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<Integer> den{Integer(1)};
    for (unsigned d = 1; d < m; ++d) {
      if (m % d) continue;
      const std::vector<Integer>& f = cache.at(d);
      std::vector<Integer> prod(den.size() + f.size() - 1, Integer(0));
      for (size_t i = 0; i < den.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) prod[i + j] += den[i] * f[j];
      den = std::move(prod);
    }
    std::vector<Integer> phi = poly_divide_exact(std::move(num), den);
    assert(phi.size() == totient(m) + 1 && phi.back() == 1);
    cache.emplace(m, std::move(phi));
  }
  return cache.at(n);
}

RealCyclotomic RealCyclotomic::lifted(unsigned m) const {
  if (m == conductor_) return *this;
  assert(m % conductor_ == 0);
  const unsigned k = m / conductor_;
  std::vector<Rational> p(coeffs_.size() * k, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * k] = coeffs_[i];
  poly_mod(p, cyclotomic_polynomial(m));
  return RealCyclotomic(m, std::move(p));
}

RealCyclotomic RealCyclotomic::cos_turn(const Rational& r) {
  Rational t = r - Rational(Integer(r.get_num() / r.get_den()) - (r < 0 ? 1 : 0));
  if (t >= 1) t -= 1;  // now 0 <= t < 1 with the same cosine
  const unsigned b = static_cast<unsigned>(t.get_den().get_ui());
  const unsigned a = static_cast<unsigned>(t.get_num().get_ui());
  std::vector<Rational> p(b, Rational(0));
  p[a % b] += Rational(1, 2);
  p[(b - a) % b] += Rational(1, 2);
  poly_mod(p, cyclotomic_polynomial(b));
  return RealCyclotomic(b, std::move(p));
}

RealCyclotomic RealCyclotomic::sqrt2() {
  std::vector<Rational> p(8, Rational(0));
  p[1] = 1;
  p[7] = 1;
  poly_mod(p, cyclotomic_polynomial(8));
  return RealCyclotomic(8, std::move(p));
}

RealCyclotomic RealCyclotomic::sqrt3() {
  std::vector<Rational> p(12, Rational(0));
  p[1] = 1;
  p[11] = 1;
  poly_mod(p, cyclotomic_polynomial(12));
  return RealCyclotomic(12, std::move(p));
}

bool RealCyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool RealCyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational RealCyclotomic::rational() const {
  assert(is_rational());
  return coeffs_[0];
}

RealCyclotomic RealCyclotomic::operator-() const {
  RealCyclotomic r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

RealCyclotomic& RealCyclotomic::operator+=(const RealCyclotomic& o) {
  const unsigned m = static_cast<unsigned>(
      lcm(Integer(conductor_), Integer(o.conductor_)).get_ui());
  *this = lifted(m);
  RealCyclotomic rhs = o.lifted(m);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RealCyclotomic& RealCyclotomic::operator-=(const RealCyclotomic& o) {
  return *this += -o;
}

RealCyclotomic& RealCyclotomic::operator*=(const RealCyclotomic& o) {
  const unsigned m = static_cast<unsigned>(
      lcm(Integer(conductor_), Integer(o.conductor_)).get_ui());
  *this = lifted(m);
  RealCyclotomic rhs = o.lifted(m);
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  poly_mod(prod, cyclotomic_polynomial(m));
  coeffs_ = std::move(prod);
  return *this;
}

RealCyclotomic RealCyclotomic::inverse() const {
  assert(!is_zero());
  if (is_rational()) return RealCyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid in Q[x] against the (irreducible) cyclotomic modulus:
  // u*self + v*phi = 1, so u is the inverse.
  const std::vector<Integer>& phi_z = cyclotomic_polynomial(conductor_);
  std::vector<Rational> r0(phi_z.begin(), phi_z.end());
  std::vector<Rational> r1 = poly_trim(coeffs_);
  std::vector<Rational> u0{}, u1{Rational(1)};  // coefficients of self
  while (true) {
    assert(!r1.empty());
    auto [q, r2] = poly_divmod(std::move(r0), r1);
    // u2 = u0 - q*u1
    std::vector<Rational> u2 = u0;
    if (!u1.empty() && !q.empty()) {
      u2.resize(std::max(u2.size(), q.size() + u1.size() - 1), Rational(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
      }
      u2 = poly_trim(std::move(u2));
    }
    if (r2.empty()) {
      // r1 is the gcd; irreducibility of the modulus makes it a nonzero
      // constant.
      assert(r1.size() == 1);
      std::vector<Rational> inv = std::move(u1);
      for (Rational& c : inv) c /= r1[0];
      poly_mod(inv, phi_z);
      return RealCyclotomic(conductor_, std::move(inv));
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
}

namespace {

// Adds to [lo, hi] an enclosure of coeff * cos(2*pi*k/n).
void accumulate_term(mpfr_t lo, mpfr_t hi, const Rational& coeff, unsigned k,
                     unsigned n, mpfr_prec_t prec) {
  mpfr_t tl, th, c, w, a, b;
  mpfr_inits2(prec, tl, th, c, w, a, b, (mpfr_ptr) nullptr);
  // theta = 2*pi*k/n, rounded both ways.
  mpfr_const_pi(tl, MPFR_RNDD);
  mpfr_mul_ui(tl, tl, 2 * k, MPFR_RNDD);
  mpfr_div_ui(tl, tl, n, MPFR_RNDD);
  mpfr_const_pi(th, MPFR_RNDU);
  mpfr_mul_ui(th, th, 2 * k, MPFR_RNDU);
  mpfr_div_ui(th, th, n, MPFR_RNDU);
  // cos enclosure: cos is 1-Lipschitz, and mpfr_cos is correctly rounded, so
  // cos(theta) lies within width + 2^(2-prec) of the point value.
  mpfr_cos(c, tl, MPFR_RNDN);
  mpfr_sub(w, th, tl, MPFR_RNDU);
  mpfr_set_ui_2exp(a, 1, 2 - prec, MPFR_RNDU);
  mpfr_add(w, w, a, MPFR_RNDU);
  mpfr_sub(a, c, w, MPFR_RNDD);  // a <= cos(theta)
  mpfr_add(b, c, w, MPFR_RNDU);  // b >= cos(theta)
  // Multiply by the exact rational coefficient.
  if (sgn(coeff) >= 0) {
    mpfr_mul_q(a, a, coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(b, b, coeff.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_swap(a, b);
    mpfr_mul_q(a, a, coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(b, b, coeff.get_mpq_t(), MPFR_RNDU);
  }
  mpfr_add(lo, lo, a, MPFR_RNDD);
  mpfr_add(hi, hi, b, MPFR_RNDU);
  mpfr_clears(tl, th, c, w, a, b, (mpfr_ptr) nullptr);
}

}  // namespace

int sign_of(const RealCyclotomic& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sign_of(x.rational());
  const std::vector<Rational>& cs = x.coefficients();
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    assert(prec <= (mpfr_prec_t(1) << 20));
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, (mpfr_ptr) nullptr);
    mpfr_set_zero(lo, 0);
    mpfr_set_zero(hi, 0);
    for (size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == 0) continue;
      accumulate_term(lo, hi, cs[i], static_cast<unsigned>(i), x.conductor(), prec);
    }
    int result = 0;
    if (mpfr_sgn(lo) > 0)
      result = 1;
    else if (mpfr_sgn(hi) < 0)
      result = -1;
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    if (result != 0) return result;
  }
}

std::string approx_string(const RealCyclotomic& x, unsigned bits) {
  mpfr_t acc, t;
  mpfr_inits2(bits, acc, t, (mpfr_ptr) nullptr);
  mpfr_set_zero(acc, 0);
  const std::vector<Rational>& cs = x.coefficients();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    mpfr_const_pi(t, MPFR_RNDN);
    mpfr_mul_ui(t, t, 2 * static_cast<unsigned>(i), MPFR_RNDN);
    mpfr_div_ui(t, t, x.conductor(), MPFR_RNDN);
    mpfr_cos(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, cs[i].get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.20Rg", acc);
  mpfr_clears(acc, t, (mpfr_ptr) nullptr);
  return buf;
}

}  // namespace atlas
