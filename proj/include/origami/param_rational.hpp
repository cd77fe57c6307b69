#pragma once

#include <string>
#include <vector>

#include "origami/interval.hpp"
#include "origami/rational.hpp"

namespace origami {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  explicit Polynomial(const Rational& constant);
  static Polynomial monomial(const Rational& c, long degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(long i) const;
  const Rational& leading() const { return c_.back(); }

  // t^degree * p(1/t).
  Polynomial reversed() const;
  Polynomial monic() const;
  Polynomial shifted(long k) const;  // multiply by t^k
  Polynomial scaled(const Rational& s) const;

  ComplexInterval evaluate(const ComplexInterval& at) const;
  std::string to_string(const std::string& var = "t") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// An element of Q(t), where t stands for a formal unit-circle symbol
// e^{i theta}. Stored as num/den with den monic and gcd(num, den) = 1.
// Conjugation is the field involution t -> 1/t, so identities proved here
// hold for every specialization of t on the unit circle where both sides are
// defined.
class ParamRational {
 public:
  ParamRational();
  explicit ParamRational(const Rational& value);
  ParamRational(Polynomial num, Polynomial den);

  // t^k for any integer k.
  static ParamRational power_of_t(long k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational rational_value() const;

  ParamRational conj() const;
  ParamRational inverse() const;
  int leading_sign() const;

  // Evaluates at a specialization of t. Throws DivisionByZero when the
  // denominator enclosure contains zero.
  ComplexInterval to_interval(const ComplexInterval& t) const;
  std::string canonical_key() const;
  std::string to_string() const;

  friend ParamRational operator+(const ParamRational& a, const ParamRational& b);
  friend ParamRational operator-(const ParamRational& a, const ParamRational& b);
  friend ParamRational operator-(const ParamRational& a);
  friend ParamRational operator*(const ParamRational& a, const ParamRational& b);
  friend bool operator==(const ParamRational& a, const ParamRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace origami
