#include "origami/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "origami/errors.hpp"

namespace origami {

namespace {

void check_precision(long bits) {
  if (bits < kMinPrecisionBits)
    throw PrecisionTooLow("precision " + std::to_string(bits) + " bits is below the floor of " +
                          std::to_string(kMinPrecisionBits));
}

std::string endpoint_string(mpfr_srcptr x, mpfr_rnd_t rnd) {
  int digits = static_cast<int>(std::ceil(static_cast<double>(mpfr_get_prec(x)) * 0.30103)) + 1;
  char* buf = nullptr;
  if (rnd == MPFR_RNDD)
    mpfr_asprintf(&buf, "%.*RDe", digits, x);
  else
    mpfr_asprintf(&buf, "%.*RUe", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

Interval::Interval(long precision_bits) {
  check_precision(precision_bits);
  mpfr_init2(lo_, precision_bits);
  mpfr_init2(hi_, precision_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& value, long precision_bits) : Interval(precision_bits) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi(long precision_bits) {
  Interval r(precision_bits);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(a);
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Interval Interval::width() const {
  Interval r(precision());
  mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  return r;
}

double Interval::midpoint() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

std::string Interval::lo_string() const { return endpoint_string(lo_, MPFR_RNDD); }
std::string Interval::hi_string() const { return endpoint_string(hi_, MPFR_RNDU); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const long prec = std::max(a.precision(), b.precision());
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionByZero();
  Interval inv(b.precision());
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval square(const Interval& a) {
  if (!a.contains_zero()) return a * a;
  Interval r(a.precision());
  mpfr_t t;
  mpfr_init2(t, a.precision());
  mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_sqr(t, a.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_set_zero(r.lo_, 1);
  mpfr_clear(t);
  return r;
}

namespace {

using PointFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Range of a trigonometric function over x, given an enclosure of its
// derivative sign at the endpoints. The interval is assumed narrow (well
// under pi), so at most one extremum lies inside it.
void trig_range(mpfr_ptr lo, mpfr_ptr hi, const Interval& x, PointFn f, PointFn df) {
  const long prec = x.precision();
  mpfr_t a, b, da, db;
  mpfr_inits2(prec, a, b, da, db, static_cast<mpfr_ptr>(nullptr));
  f(a, x.lo(), MPFR_RNDD);
  f(b, x.hi(), MPFR_RNDD);
  mpfr_min(lo, a, b, MPFR_RNDD);
  f(a, x.lo(), MPFR_RNDU);
  f(b, x.hi(), MPFR_RNDU);
  mpfr_max(hi, a, b, MPFR_RNDU);

  // Derivative sign at both endpoints, each certified with two roundings.
  auto certified_sign = [&](mpfr_srcptr at) {
    df(da, at, MPFR_RNDD);
    df(db, at, MPFR_RNDU);
    if (mpfr_sgn(da) > 0) return 1;
    if (mpfr_sgn(db) < 0) return -1;
    return 0;
  };
  int s0 = certified_sign(x.lo());
  int s1 = certified_sign(x.hi());
  bool monotone = s0 != 0 && s0 == s1;
  if (!monotone) {
    if (mpfr_sgn(lo) > 0) {
      mpfr_set_ui(hi, 1, MPFR_RNDU);
    } else if (mpfr_sgn(hi) < 0) {
      mpfr_set_si(lo, -1, MPFR_RNDD);
    } else {
      mpfr_set_si(lo, -1, MPFR_RNDD);
      mpfr_set_ui(hi, 1, MPFR_RNDU);
    }
  }
  mpfr_clears(a, b, da, db, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

Interval cos(const Interval& x) {
  Interval r(x.precision());
  // Monotone wherever sin keeps one sign.
  trig_range(r.lo_, r.hi_, x, mpfr_cos, mpfr_sin);
  return r;
}

Interval sin(const Interval& x) {
  Interval r(x.precision());
  trig_range(r.lo_, r.hi_, x, mpfr_sin, mpfr_cos);
  return r;
}

ComplexInterval ComplexInterval::unit(const Interval& radians) {
  return ComplexInterval(cos(radians), sin(radians));
}

ComplexInterval ComplexInterval::root_of_unity(long k, long n, long precision_bits) {
  long m = ((k % n) + n) % n;
  // Fold into [-n/2, n/2] so the angle stays small and the argument of the
  // trig functions is accurate.
  if (2 * m > n) m -= n;
  Interval angle = Interval::pi(precision_bits) * Interval(make_rational(2 * m, n), precision_bits);
  if (m == 0) angle = Interval(precision_bits);
  return unit(angle);
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const Interval& a, const ComplexInterval& b) {
  return {a * b.re, a * b.im};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval denom = b.norm_squared();
  if (denom.contains_zero()) throw DivisionByZero();
  ComplexInterval num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  return {num.re / denom, num.im / denom};
}

}  // namespace origami
