#pragma once

#include <string>
#include <vector>

#include "origami/geometry.hpp"
#include "origami/scalar.hpp"

namespace origami {

// A real value in (0, 1) built from projections: a projection, a complement
// 1 - p, or a product of two of these.
struct ScalingProjection {
  ExactScalar value;
  unsigned degree = 1;
  std::string description;  // e.g. "p0", "1-p1", "p0*(1-p2)"
};

// Candidates are ordered by degree, then by the number of complements used,
// then by canonical key; the first one strictly inside (0, 1) wins.
// Throws NotFound when no candidate of degree at most 2 qualifies.
ScalingProjection find_scaling_projection(const std::vector<ExactScalar>& projections);

struct DensityWitness {
  ExactScalar p;
  std::string p_description;
  ExactScalar z;
  Integer a;
  Integer b;
  unsigned n1 = 0;
  unsigned n2 = 0;
  ExactScalar value;  // a p^n1 + b p^n2 z
  Rational target_re;
  Rational target_im;
  Rational epsilon;
  ComplexInterval value_interval{64};
  long precision_bits = 64;
};

// An element a p^N1 + b p^N2 z of R(U) within epsilon of the target. N2 is
// the least exponent with |Im z| p^N2 < epsilon/2, b = ceil(Im target / (Im z p^N2)),
// and N1 is the least exponent for which a = round(r / p^N1) gives
// |a p^N1 - r| < epsilon/2, where r = Re target - b p^N2 Re z.
// Requires the cyclotomic backend, |U| >= 4 and 1 in U.
DensityWitness approximate(const Rational& target_re, const Rational& target_im, const Rational& epsilon,
                           const AngleSet& angles, long precision_bits = 64);

// |value - target| < epsilon, certified by interval arithmetic.
bool witness_within_epsilon(const DensityWitness& w);

}  // namespace origami
