#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/scalar.hpp"

namespace origami {

// A line direction: a unit complex number taken modulo sign. The stored value
// is the representative whose canonical form has a positive leading
// coefficient. `argument` orders angles when it is known: for angles given
// as e^{i pi f} it is f in [0, 1); for the symbolic power t^k it is k.
class UnitAngle {
 public:
  // Throws Error unless value * conj(value) == 1.
  static UnitAngle from_value(const ExactScalar& value, std::optional<Rational> argument = std::nullopt);
  // e^{i pi f}; f is reduced modulo 1. f = 0 yields the rational 1.
  static UnitAngle from_pi_fraction(const Rational& f);
  // The formal symbol t^k of the parametric backend.
  static UnitAngle param_power(long k);

  const ExactScalar& value() const { return value_; }
  const std::optional<Rational>& argument() const { return argument_; }
  bool is_one() const;
  bool equivalent(const UnitAngle& other) const;
  std::string key() const { return canonical_key(value_); }

  // The same direction re-expressed in the representation of `like`.
  UnitAngle lifted_like(const ExactScalar& like) const;

 private:
  UnitAngle(ExactScalar value, std::optional<Rational> argument)
      : value_(std::move(value)), argument_(std::move(argument)) {}
  ExactScalar value_;
  std::optional<Rational> argument_;
};

// L_direction(base_point) = base_point + R * direction.
struct Line {
  ExactScalar base_point;
  UnitAngle direction;

  bool contains(const ExactScalar& q) const;
};

// An ordered list of pairwise inequivalent angles sharing one exact
// representation (one cyclotomic order, or Q(t)).
class AngleSet {
 public:
  // Throws Error on angles equal modulo sign, BackendMismatch on mixed
  // cyclotomic/parametric input.
  explicit AngleSet(std::vector<UnitAngle> angles);

  std::size_t size() const { return angles_.size(); }
  const UnitAngle& operator[](std::size_t i) const { return angles_[i]; }
  auto begin() const { return angles_.begin(); }
  auto end() const { return angles_.end(); }
  const std::vector<UnitAngle>& angles() const { return angles_; }

  bool contains_one() const { return contains_one_; }
  Backend backend() const { return backend_; }
  // Common cyclotomic order (1 when no cyclotomic angle is present).
  long order() const { return order_; }
  // Every angle has a known argument.
  bool ordered() const;

  // Zero and one in the common representation.
  ExactScalar zero() const;
  ExactScalar one() const;
  UnitAngle one_angle() const;

  // Angles other than 1, by increasing argument when ordered(), otherwise
  // in input order.
  std::vector<UnitAngle> non_one_by_argument() const;

 private:
  std::vector<UnitAngle> angles_;
  bool contains_one_ = false;
  Backend backend_ = Backend::rational;
  long order_ = 1;
};

// [x, y] = x conj(y) - y conj(x).
ExactScalar bracket(const ExactScalar& x, const ExactScalar& y);

// The intersection map I_{alpha,beta} for a fixed pair of directions, with the
// reciprocal of [alpha, beta] computed once.
class Intersector {
 public:
  // Throws ParallelLines when alpha = +-beta.
  Intersector(const UnitAngle& alpha, const UnitAngle& beta);

  // I_{alpha,beta}(p, 0) = [alpha, p] / [alpha, beta] * beta.
  ExactScalar through_first(const ExactScalar& p) const;
  // I_{alpha,beta}(0, q) = [beta, q] / [beta, alpha] * alpha.
  ExactScalar through_second(const ExactScalar& q) const;
  ExactScalar operator()(const ExactScalar& p, const ExactScalar& q) const;

 private:
  ExactScalar alpha_;
  ExactScalar beta_;
  ExactScalar inv_bracket_;  // 1 / [alpha, beta]
};

// The point where the line through p with direction alpha meets the line
// through q with direction beta.
ExactScalar intersect(const UnitAngle& alpha, const UnitAngle& beta, const ExactScalar& p,
                      const ExactScalar& q);

// intersect(1, along, 0, z): where the line through z with direction `along`
// meets the real axis. Throws ParallelLines when along = +-1.
ExactScalar project_to_real_axis(const ExactScalar& z, const UnitAngle& along);

}  // namespace origami
