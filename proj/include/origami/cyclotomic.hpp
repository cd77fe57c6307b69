#pragma once

#include <memory>
#include <string>
#include <vector>

#include "origami/interval.hpp"
#include "origami/rational.hpp"

namespace origami {

// Shared tables for Q(zeta_n): the cyclotomic polynomial Phi_n and the
// reductions of x^k modulo Phi_n for 0 <= k < n. Instances are immutable and
// cached per order.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(long order);

  long order() const { return order_; }
  long degree() const { return static_cast<long>(modulus_.size()) - 1; }
  // Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<Integer>& modulus() const { return modulus_; }
  // x^k mod Phi_n for k taken modulo n.
  const std::vector<Integer>& power(long k) const;

  // Reduces an integer polynomial (lowest degree first) modulo Phi_n in place;
  // the result has exactly degree() entries.
  void reduce(std::vector<Integer>& poly) const;

 private:
  explicit CyclotomicField(long order);

  long order_;
  std::vector<Integer> modulus_;
  std::vector<std::vector<Integer>> powers_;
};

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(long n);
long euler_phi(long n);

// An element of Q(zeta_n) stored as the unique reduced residue
//   (c_0 + c_1 x + ... + c_{phi(n)-1} x^{phi(n)-1}) / d   modulo Phi_n(x),
// with integer c_i, d > 0 and gcd(c_0, ..., c_{phi-1}, d) = 1.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(long order);
  CyclotomicElement(long order, const Rational& value);
  // From rational coefficients of 1, zeta, ..., zeta^{len-1}; any length is
  // accepted and reduced.
  CyclotomicElement(long order, const std::vector<Rational>& coefficients);

  // zeta_n^k.
  static CyclotomicElement root_of_unity(long order, long k);

  long order() const { return field_->order(); }
  long degree() const { return field_->degree(); }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coefficient(long i) const;
  std::vector<Rational> coordinates() const;

  bool is_zero() const;
  bool is_rational() const;
  // Precondition: is_rational().
  Rational rational_value() const;

  // Image in Q(zeta_m); m must be a multiple of order().
  CyclotomicElement embed(long m) const;

  CyclotomicElement conj() const;
  // Throws DivisionByZero on zero.
  CyclotomicElement inverse() const;

  // Sign of the first nonzero coefficient (0 for the zero element).
  int leading_sign() const;

  ComplexInterval to_interval(long precision_bits) const;
  std::string canonical_key() const;
  std::string to_string() const;

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<Integer> num,
                    Integer den);
  void normalize();

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Integer> num_;
  Integer den_;
};

}  // namespace origami
