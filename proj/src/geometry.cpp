#include "origami/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "origami/errors.hpp"

namespace origami {

namespace {

ExactScalar sign_normalized(const ExactScalar& v) { return leading_sign(v) < 0 ? -v : v; }

ExactScalar lift_to(const ExactScalar& v, Backend backend, long order) {
  switch (backend) {
    case Backend::rational:
      return v;
    case Backend::cyclotomic:
      if (const auto* c = v.get_if<CyclotomicElement>()) return ExactScalar(c->embed(order));
      if (v.backend() == Backend::rational) return ExactScalar(CyclotomicElement(order, rational_value(v)));
      break;
    case Backend::parametric:
      if (v.backend() == Backend::parametric) return v;
      if (v.backend() == Backend::rational) return ExactScalar(ParamRational(rational_value(v)));
      break;
  }
  throw BackendMismatch("cannot combine cyclotomic and parametric angles");
}

}  // namespace

UnitAngle UnitAngle::from_value(const ExactScalar& value, std::optional<Rational> argument) {
  if (!(value * conj(value) == ExactScalar::from_rational_like(value, 1)))
    throw Error("angle value does not have unit modulus: " + to_string(value));
  return UnitAngle(sign_normalized(value), std::move(argument));
}

UnitAngle UnitAngle::from_pi_fraction(const Rational& f) {
  Rational g = f - Rational(floor(f));
  if (g == 0) return UnitAngle(ExactScalar(Rational(1)), Rational(0));
  const long den = g.get_den().get_si();
  const long num = g.get_num().get_si();
  ExactScalar v(CyclotomicElement::root_of_unity(2 * den, num));
  return UnitAngle(sign_normalized(v), g);
}

UnitAngle UnitAngle::param_power(long k) {
  if (k == 0) return UnitAngle(ExactScalar(Rational(1)), Rational(0));
  return UnitAngle(sign_normalized(ExactScalar(ParamRational::power_of_t(k))), Rational(k));
}

bool UnitAngle::is_one() const {
  return value_ == ExactScalar::from_rational_like(value_, 1) ||
         value_ == ExactScalar::from_rational_like(value_, -1);
}

bool UnitAngle::equivalent(const UnitAngle& other) const {
  return value_ == other.value_ || value_ == -other.value_;
}

UnitAngle UnitAngle::lifted_like(const ExactScalar& like) const {
  long order = 1;
  if (const auto* c = like.get_if<CyclotomicElement>()) order = c->order();
  if (const auto* c = value_.get_if<CyclotomicElement>()) order = std::lcm(order, c->order());
  Backend b = like.backend() == Backend::rational ? value_.backend() : like.backend();
  return UnitAngle(sign_normalized(lift_to(value_, b, order)), argument_);
}

bool Line::contains(const ExactScalar& q) const {
  return bracket(direction.value(), q - base_point).is_zero();
}

AngleSet::AngleSet(std::vector<UnitAngle> angles) {
  for (const auto& a : angles) {
    const Backend b = a.value().backend();
    if (b == Backend::rational) continue;
    if (backend_ != Backend::rational && backend_ != b)
      throw BackendMismatch("cannot combine cyclotomic and parametric angles");
    backend_ = b;
    if (const auto* c = a.value().get_if<CyclotomicElement>()) order_ = std::lcm(order_, c->order());
  }
  const ExactScalar like = backend_ == Backend::cyclotomic
                               ? ExactScalar(CyclotomicElement(order_))
                               : backend_ == Backend::parametric ? ExactScalar(ParamRational())
                                                                 : ExactScalar(Rational(0));
  for (auto& a : angles) {
    UnitAngle lifted = a.lifted_like(like);
    for (const auto& existing : angles_)
      if (existing.equivalent(lifted))
        throw Error("angles must be distinct modulo sign: " + to_string(lifted.value()));
    contains_one_ |= lifted.is_one();
    angles_.push_back(std::move(lifted));
  }
}

bool AngleSet::ordered() const {
  return std::all_of(angles_.begin(), angles_.end(),
                     [](const UnitAngle& a) { return a.argument().has_value(); });
}

ExactScalar AngleSet::zero() const {
  switch (backend_) {
    case Backend::cyclotomic:
      return ExactScalar(CyclotomicElement(order_));
    case Backend::parametric:
      return ExactScalar(ParamRational());
    case Backend::rational:
      break;
  }
  return ExactScalar(Rational(0));
}

ExactScalar AngleSet::one() const { return ExactScalar::from_rational_like(zero(), 1); }

UnitAngle AngleSet::one_angle() const { return UnitAngle::from_value(one(), Rational(0)); }

std::vector<UnitAngle> AngleSet::non_one_by_argument() const {
  std::vector<UnitAngle> out;
  for (const auto& a : angles_)
    if (!a.is_one()) out.push_back(a);
  if (ordered())
    std::stable_sort(out.begin(), out.end(), [](const UnitAngle& a, const UnitAngle& b) {
      return *a.argument() < *b.argument();
    });
  return out;
}

ExactScalar bracket(const ExactScalar& x, const ExactScalar& y) {
  return x * conj(y) - y * conj(x);
}

Intersector::Intersector(const UnitAngle& alpha, const UnitAngle& beta)
    : alpha_(alpha.value()), beta_(beta.value()) {
  ExactScalar d = bracket(alpha_, beta_);
  if (d.is_zero()) throw ParallelLines();
  inv_bracket_ = inv(d);
}

ExactScalar Intersector::through_first(const ExactScalar& p) const {
  return bracket(alpha_, p) * inv_bracket_ * beta_;
}

ExactScalar Intersector::through_second(const ExactScalar& q) const {
  // [beta, alpha] = -[alpha, beta].
  return -(bracket(beta_, q) * inv_bracket_ * alpha_);
}

ExactScalar Intersector::operator()(const ExactScalar& p, const ExactScalar& q) const {
  return through_first(p) + through_second(q);
}

ExactScalar intersect(const UnitAngle& alpha, const UnitAngle& beta, const ExactScalar& p,
                      const ExactScalar& q) {
  const ExactScalar d = bracket(alpha.value(), beta.value());
  if (d.is_zero()) throw ParallelLines();
  return bracket(alpha.value(), p) / d * beta.value() +
         bracket(beta.value(), q) / (-d) * alpha.value();
}

ExactScalar project_to_real_axis(const ExactScalar& z, const UnitAngle& along) {
  const ExactScalar one = ExactScalar::from_rational_like(along.value(), 1);
  return intersect(UnitAngle::from_value(one, Rational(0)), along,
                   ExactScalar::from_rational_like(z, 0), z);
}

}  // namespace origami
