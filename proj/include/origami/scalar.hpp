#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "origami/cyclotomic.hpp"
#include "origami/interval.hpp"
#include "origami/param_rational.hpp"
#include "origami/rational.hpp"

namespace origami {

enum class Backend { rational, cyclotomic, parametric };

std::string to_string(Backend b);

// An exact complex number in one of three representations. Rationals mix
// freely with either other backend; cyclotomic operands of different orders
// are embedded into the lcm order; cyclotomic and parametric values never mix.
// Values are immutable and safe to share across threads.
class ExactScalar {
 public:
  using Storage = std::variant<Rational, CyclotomicElement, ParamRational>;

  ExactScalar() : value_(Rational(0)) {}
  ExactScalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(CyclotomicElement v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(ParamRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  Backend backend() const { return static_cast<Backend>(value_.index()); }
  const Storage& storage() const { return value_; }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&value_);
  }

  // The rational q in the same field as `like` (useful for building 0 and 1).
  static ExactScalar from_rational_like(const ExactScalar& like, const Rational& q);

  bool is_zero() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a);
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

 private:
  Storage value_;
};

ExactScalar add(const ExactScalar& a, const ExactScalar& b);
ExactScalar mul(const ExactScalar& a, const ExactScalar& b);
ExactScalar inv(const ExactScalar& a);
ExactScalar conj(const ExactScalar& a);
ExactScalar pow(const ExactScalar& a, unsigned long e);

// is_real is invariance under conjugation. For parametric values this is
// invariance under t -> 1/t, i.e. realness at every unit-circle
// specialization of t.
bool is_real(const ExactScalar& a);
bool is_rational(const ExactScalar& a);
bool is_integer(const ExactScalar& a);
// Throws Error unless is_rational(a).
Rational rational_value(const ExactScalar& a);

// Sign of the first nonzero coefficient of the canonical form.
int leading_sign(const ExactScalar& a);

// (a + conj a) / 2, in the same field.
ExactScalar real_part(const ExactScalar& a);
// (a - conj a) / (2i). Cyclotomic values are embedded into an order divisible
// by 4 so that i is available; parametric values are rejected.
ExactScalar imag_part(const ExactScalar& a);

// Exact sign of a real rational or cyclotomic value. Zero is detected
// exactly; nonzero values are separated from zero by interval refinement.
int certified_sign(const ExactScalar& real_value);
Integer floor_real(const ExactScalar& real_value);
Integer ceil_real(const ExactScalar& real_value);
// Nearest integer, ties rounded up.
Integer round_real(const ExactScalar& real_value);

// Encloses a. Parametric values need a specialization for t.
ComplexInterval to_interval(const ExactScalar& a, long precision_bits,
                            const std::optional<ComplexInterval>& specialization = std::nullopt);

// Unique per value within one ambient field (fixed cyclotomic order or Q(t)).
std::string canonical_key(const ExactScalar& a);
std::string to_string(const ExactScalar& a);

// Coordinates of each value in one shared finite Q-basis, so that
// sum n_i v_i = w holds iff the same relation holds between coordinate
// vectors. Cyclotomic values use the power basis of the common order;
// parametric values are multiplied by a common denominator first and use the
// monomial basis of the resulting polynomials.
std::vector<std::vector<Rational>> linearize(std::span<const ExactScalar> values);

}  // namespace origami
