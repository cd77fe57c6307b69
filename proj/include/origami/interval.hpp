#pragma once

#include <mpfr.h>

#include <string>

#include "origami/rational.hpp"

namespace origami {

// Lowest precision accepted by any public evaluation entry point.
inline constexpr long kMinPrecisionBits = 16;

// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
// the lower endpoint down and the upper endpoint up, so results enclose the
// exact value of the operation applied to any points of the operands.
class Interval {
 public:
  explicit Interval(long precision_bits);
  Interval(const Rational& value, long precision_bits);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval pi(long precision_bits);
  static Interval hull(const Interval& a, const Interval& b);

  long precision() const { return static_cast<long>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  bool contains(const Rational& q) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool strictly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool strictly_negative() const { return mpfr_sgn(hi_) < 0; }

  // Upper bound on hi - lo.
  Interval width() const;
  double midpoint() const;
  // Outward-rounded decimal renderings of the endpoints.
  std::string lo_string() const;
  std::string hi_string() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval square(const Interval& a);
  friend Interval cos(const Interval& x);
  friend Interval sin(const Interval& x);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(long precision_bits) : re(precision_bits), im(precision_bits) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  // Enclosure of exp(i * radians).
  static ComplexInterval unit(const Interval& radians);
  // Enclosure of exp(2*pi*i * k / n).
  static ComplexInterval root_of_unity(long k, long n, long precision_bits);

  long precision() const { return re.precision(); }
  bool contains(const Rational& real, const Rational& imag) const {
    return re.contains(real) && im.contains(imag);
  }
  bool contains(const ComplexInterval& inner) const {
    return re.contains(inner.re) && im.contains(inner.im);
  }
  // Enclosure of |z|^2.
  Interval norm_squared() const { return square(re) + square(im); }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const Interval& a, const ComplexInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
};

}  // namespace origami
