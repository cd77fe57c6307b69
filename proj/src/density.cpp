#include "origami/density.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "origami/construction.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {

bool strictly_inside_unit_interval(const ExactScalar& v) {
  if (!is_real(v)) return false;
  const ExactScalar one = ExactScalar::from_rational_like(v, 1);
  return certified_sign(v) > 0 && certified_sign(one - v) > 0;
}

ExactScalar abs_real(const ExactScalar& v) { return certified_sign(v) < 0 ? -v : v; }

// v < bound for real values.
bool less_than(const ExactScalar& v, const ExactScalar& bound) { return certified_sign(bound - v) > 0; }

}  // namespace

ScalingProjection find_scaling_projection(const std::vector<ExactScalar>& projections) {
  struct Factor {
    ExactScalar value;
    bool complement;
    std::string name;
  };
  std::vector<Factor> factors;
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const ExactScalar& p = projections[k];
    factors.push_back({p, false, "p" + std::to_string(k)});
    factors.push_back({ExactScalar::from_rational_like(p, 1) - p, true, "1-p" + std::to_string(k)});
  }

  struct Candidate {
    ScalingProjection sp;
    int complements;
    std::string key;
  };
  auto best_of = [](std::vector<Candidate>& cands) -> const Candidate* {
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
      return std::tie(x.complements, x.key) < std::tie(y.complements, y.key);
    });
    for (const auto& c : cands)
      if (strictly_inside_unit_interval(c.sp.value)) return &c;
    return nullptr;
  };

  std::vector<Candidate> first;
  for (const auto& f : factors)
    first.push_back({{f.value, 1, f.name}, f.complement ? 1 : 0, canonical_key(f.value)});
  if (const auto* c = best_of(first)) return c->sp;

  std::vector<Candidate> second;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      const ExactScalar v = factors[i].value * factors[j].value;
      auto wrap = [](const Factor& f) { return f.complement ? "(" + f.name + ")" : f.name; };
      second.push_back({{v, 2, wrap(factors[i]) + "*" + wrap(factors[j])},
                        int(factors[i].complement) + int(factors[j].complement), canonical_key(v)});
    }
  }
  if (const auto* c = best_of(second)) return c->sp;
  throw NotFound("no product of at most two projections lies in (0, 1)");
}

DensityWitness approximate(const Rational& target_re, const Rational& target_im, const Rational& epsilon,
                           const AngleSet& angles, long precision_bits) {
  if (epsilon <= 0) throw Error("epsilon must be positive");
  if (angles.backend() == Backend::parametric)
    throw UnsupportedConfiguration("density needs concrete angles; the parametric backend is excluded");
  if (!angles.contains_one() || angles.size() < 4)
    throw UnsupportedConfiguration("density requires 1 in U and at least four angles");

  const auto primaries = primary_monomials(angles);
  if (primaries.empty()) throw NotFound("no non-real elementary monomial");
  const ScalingProjection sp = find_scaling_projection(projection_set(angles).basis);

  // Work in an order divisible by 4 so that real and imaginary parts exist.
  const long order = std::lcm(std::max(angles.order(), 1L), 4L);
  auto lift = [&](const ExactScalar& v) -> ExactScalar {
    if (const auto* c = v.get_if<CyclotomicElement>()) return ExactScalar(c->embed(order));
    return ExactScalar(CyclotomicElement(order, rational_value(v)));
  };

  DensityWitness w;
  w.p = lift(sp.value);
  w.p_description = sp.description;
  w.z = lift(primaries.front().value);
  w.target_re = target_re;
  w.target_im = target_im;
  w.epsilon = epsilon;
  w.precision_bits = precision_bits;

  const ExactScalar half_eps(Rational(epsilon / 2));
  const ExactScalar re_z = real_part(w.z);
  const ExactScalar im_z = imag_part(w.z);
  const ExactScalar abs_im_z = abs_real(im_z);

  // N2: least exponent with |Im z| p^N2 < eps/2.
  ExactScalar scale2 = ExactScalar::from_rational_like(w.p, 1);
  w.n2 = 0;
  while (!less_than(abs_im_z * scale2, half_eps)) {
    scale2 *= w.p;
    ++w.n2;
  }
  const ExactScalar theta = im_z * scale2;
  w.b = ceil_real(ExactScalar(target_im) / theta);

  // N1 and a on the real residual.
  const ExactScalar residual = ExactScalar(target_re) - ExactScalar(Rational(w.b)) * scale2 * re_z;
  ExactScalar scale1 = ExactScalar::from_rational_like(w.p, 1);
  w.n1 = 0;
  for (;;) {
    w.a = round_real(residual / scale1);
    if (less_than(abs_real(ExactScalar(Rational(w.a)) * scale1 - residual), half_eps)) break;
    scale1 *= w.p;
    ++w.n1;
  }

  w.value = ExactScalar(Rational(w.a)) * scale1 + ExactScalar(Rational(w.b)) * scale2 * w.z;
  w.value_interval = to_interval(w.value, precision_bits);
  return w;
}

bool witness_within_epsilon(const DensityWitness& w) {
  const ExactScalar diff = w.value - ExactScalar(w.target_re) -
                           ExactScalar(CyclotomicElement::root_of_unity(4, 1)) * ExactScalar(w.target_im);
  for (long prec = std::max(w.precision_bits, kMinPrecisionBits); prec <= (1L << 16); prec *= 2) {
    const Interval d2 = to_interval(diff, prec).norm_squared();
    const Interval e2 = square(Interval(w.epsilon, prec));
    if ((e2 - d2).strictly_positive()) return true;
    if (mpfr_cmp(d2.lo(), e2.hi()) >= 0) return false;
  }
  return false;
}

}  // namespace origami
