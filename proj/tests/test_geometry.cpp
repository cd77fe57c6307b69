#include <gtest/gtest.h>

#include "origami/errors.hpp"
#include "origami/geometry.hpp"
#include "support.hpp"

using namespace origami;
using origami::fixtures::q;
using origami::fixtures::Rng;
using origami::fixtures::zeta;

namespace {

ExactScalar e_pi(long num, long den) { return ExactScalar(zeta(2 * den, num)); }

}  // namespace

TEST(BracketTest, Examples) {
  const ExactScalar x = e_pi(1, 6);
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_EQ(bracket(ExactScalar(q(1)), ExactScalar(zeta(4, 1))), ExactScalar(q(-2)) * ExactScalar(zeta(4, 1)));
  // [zeta_12, zeta_12^4] = 2i sin(pi/6 - 2pi/3) = -2i.
  const ExactScalar b = bracket(ExactScalar(zeta(12, 1)), ExactScalar(zeta(12, 4)));
  EXPECT_EQ(b, ExactScalar(q(-2)) * ExactScalar(zeta(4, 1)));
  const ComplexInterval box = to_interval(b, 64);
  EXPECT_TRUE(box.re.contains(q(0)));
  EXPECT_TRUE(box.im.contains(q(-2)));
}

TEST(BracketTest, AlternatingAndRealBilinear) {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const ExactScalar x = rng.cyclotomic(12), y = rng.cyclotomic(12), w = rng.cyclotomic(12);
    const ExactScalar r = rng.real_cyclotomic(12);
    ASSERT_EQ(bracket(x, y), -bracket(y, x));
    ASSERT_EQ(bracket(r * x + w, y), r * bracket(x, y) + bracket(w, y));
  }
}

TEST(UnitAngleTest, SignRuleAndEquivalence) {
  const UnitAngle a = UnitAngle::from_pi_fraction(q(1, 6));
  const UnitAngle b = UnitAngle::from_pi_fraction(q(7, 6));
  EXPECT_TRUE(a.equivalent(b));
  EXPECT_EQ(a.value(), b.value());
  EXPECT_EQ(leading_sign(a.value()), 1);
  EXPECT_TRUE(UnitAngle::from_pi_fraction(0).is_one());
  EXPECT_TRUE(UnitAngle::from_pi_fraction(1).is_one());
  EXPECT_FALSE(a.is_one());
  EXPECT_THROW(UnitAngle::from_value(ExactScalar(q(2))), Error);
}

TEST(UnitAngleTest, ParamPowers) {
  const UnitAngle t = UnitAngle::param_power(1);
  EXPECT_EQ(t.value().backend(), Backend::parametric);
  EXPECT_TRUE(UnitAngle::param_power(0).is_one());
  EXPECT_FALSE(t.equivalent(UnitAngle::param_power(2)));
}

TEST(AngleSetTest, RejectsDuplicatesAndMixedBackends) {
  EXPECT_THROW(fixtures::pi_angles({q(1, 6), q(7, 6)}), Error);
  EXPECT_THROW(AngleSet({UnitAngle::from_pi_fraction(q(1, 6)), UnitAngle::param_power(1)}), BackendMismatch);
  const AngleSet u = fixtures::example_one();
  EXPECT_EQ(u.order(), 12);
  EXPECT_TRUE(u.contains_one());
  EXPECT_EQ(u.backend(), Backend::cyclotomic);
  for (const auto& a : u) EXPECT_EQ(a.value().get_if<CyclotomicElement>()->order(), 12);
}

TEST(LineTest, Membership) {
  const Line l{ExactScalar(q(1)), UnitAngle::from_pi_fraction(q(1, 2))};
  EXPECT_TRUE(l.contains(ExactScalar(q(1)) + ExactScalar(q(5)) * ExactScalar(zeta(4, 1))));
  EXPECT_FALSE(l.contains(ExactScalar(q(2)) + ExactScalar(zeta(4, 1))));
}

TEST(IntersectTest, ExampleValues) {
  const UnitAngle p6 = UnitAngle::from_pi_fraction(q(1, 6));
  const UnitAngle p3 = UnitAngle::from_pi_fraction(q(1, 3));
  const UnitAngle p2 = UnitAngle::from_pi_fraction(q(1, 2));
  const ExactScalar zero(q(0)), one(q(1));
  EXPECT_EQ(intersect(p3, p2, zero, one), ExactScalar(q(2)) * e_pi(1, 3));
  const ExactScalar z1 = intersect(p6, p2, zero, one);
  EXPECT_EQ(real_part(z1), ExactScalar(q(1)));
  EXPECT_EQ(imag_part(z1) * fixtures::sqrt3(), ExactScalar(q(1)));
  EXPECT_EQ(z1, ExactScalar(q(2, 3)) * fixtures::sqrt3() * e_pi(1, 6));
}

TEST(IntersectTest, SamePointTwice) {
  Rng rng(22);
  for (int k = 0; k < 50; ++k) {
    const auto [a, b] = rng.angle_pair(24);
    const ExactScalar p = rng.cyclotomic(24);
    ASSERT_EQ(intersect(a, b, p, p), p);
  }
}

TEST(IntersectTest, ParallelLinesRejected) {
  const UnitAngle a = UnitAngle::from_pi_fraction(q(1, 6));
  EXPECT_THROW(intersect(a, a, ExactScalar(q(0)), ExactScalar(q(1))), ParallelLines);
  EXPECT_THROW(Intersector(a, UnitAngle::from_pi_fraction(q(7, 6))), ParallelLines);
}

TEST(IntersectTest, ParametricSymbols) {
  const UnitAngle t = UnitAngle::param_power(1);
  const UnitAngle t3 = UnitAngle::param_power(3);
  const ExactScalar z = intersect(t, t3, ExactScalar(q(0)), ExactScalar(q(1)));
  // z lies on the line through 0 with direction t and on the line through 1 with direction t^3.
  EXPECT_TRUE((Line{ExactScalar(q(0)), t}).contains(z));
  EXPECT_TRUE((Line{ExactScalar(q(1)), t3}).contains(z));
}

TEST(ProjectionTest, Examples) {
  const ExactScalar z3 = ExactScalar(q(2)) * e_pi(1, 3);
  EXPECT_EQ(project_to_real_axis(z3, UnitAngle::from_pi_fraction(q(1, 6))), ExactScalar(q(-2)));
  const ExactScalar z1 = ExactScalar(q(2, 3)) * fixtures::sqrt3() * e_pi(1, 6);
  EXPECT_EQ(project_to_real_axis(z1, UnitAngle::from_pi_fraction(q(1, 3))), ExactScalar(q(2, 3)));
  EXPECT_EQ(project_to_real_axis(ExactScalar(q(7, 5)), UnitAngle::from_pi_fraction(q(1, 4))), ExactScalar(q(7, 5)));
  EXPECT_THROW(project_to_real_axis(z1, UnitAngle::from_pi_fraction(0)), ParallelLines);
}

TEST(IntersectorTest, MatchesDirectFormula) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto [a, b] = rng.angle_pair(24);
    const ExactScalar p = rng.cyclotomic(24), qv = rng.cyclotomic(24);
    ASSERT_EQ(Intersector(a, b)(p, qv), intersect(a, b, p, qv));
  }
}

// Identity laws, each on 1000 random exact instances.
class IdentityLaws : public ::testing::Test {
 protected:
  static constexpr long kOrder = 24;
  Rng rng{31};
};

TEST_F(IdentityLaws, Symmetry) {
  for (int k = 0; k < 1000; ++k) {
    const auto [u, v] = rng.angle_pair(kOrder);
    const ExactScalar p = rng.cyclotomic(kOrder), qv = rng.cyclotomic(kOrder);
    ASSERT_EQ(intersect(u, v, p, qv), intersect(v, u, qv, p));
  }
}

TEST_F(IdentityLaws, Reduction) {
  const ExactScalar zero(q(0));
  for (int k = 0; k < 1000; ++k) {
    const auto [u, v] = rng.angle_pair(kOrder);
    const ExactScalar p = rng.cyclotomic(kOrder), qv = rng.cyclotomic(kOrder);
    ASSERT_EQ(intersect(u, v, p, qv), intersect(u, v, p, zero) + intersect(v, u, qv, zero));
  }
}

TEST_F(IdentityLaws, Linearity) {
  const ExactScalar zero(q(0));
  for (int k = 0; k < 1000; ++k) {
    const auto [u, v] = rng.angle_pair(kOrder);
    const ExactScalar p = rng.cyclotomic(kOrder), qv = rng.cyclotomic(kOrder);
    const ExactScalar r = rng.real_cyclotomic(kOrder);
    ASSERT_EQ(intersect(u, v, r * p + qv, zero), r * intersect(u, v, p, zero) + intersect(u, v, qv, zero));
  }
}

TEST_F(IdentityLaws, Rotation) {
  for (int k = 0; k < 1000; ++k) {
    const auto [u, v] = rng.angle_pair(kOrder);
    const UnitAngle w = rng.angle(kOrder);
    const ExactScalar p = rng.cyclotomic(kOrder), qv = rng.cyclotomic(kOrder);
    const UnitAngle wu = UnitAngle::from_value(w.value() * u.value());
    const UnitAngle wv = UnitAngle::from_value(w.value() * v.value());
    ASSERT_EQ(w.value() * intersect(u, v, p, qv), intersect(wu, wv, w.value() * p, w.value() * qv));
  }
}

TEST_F(IdentityLaws, Parallelogram) {
  for (int k = 0; k < 1000; ++k) {
    const auto [u, v] = rng.angle_pair(kOrder);
    const ExactScalar p = rng.cyclotomic(kOrder), qv = rng.cyclotomic(kOrder);
    ASSERT_EQ(intersect(u, v, p, qv) + intersect(v, u, p, qv), p + qv);
  }
}

TEST_F(IdentityLaws, AgreesWithLinearSolve) {
  for (int k = 0; k < 500; ++k) {
    const auto [u, v] = rng.angle_pair(kOrder);
    const ExactScalar p = rng.cyclotomic(kOrder), qv = rng.cyclotomic(kOrder);
    auto lift = [](const ExactScalar& x) {
      if (const auto* c = x.get_if<CyclotomicElement>()) return c->embed(kOrder);
      return CyclotomicElement(kOrder, rational_value(x));
    };
    const CyclotomicElement expected =
        fixtures::oracle_intersection(kOrder, lift(u.value()), lift(v.value()), lift(p), lift(qv));
    ASSERT_EQ(intersect(u, v, p, qv), ExactScalar(expected));
  }
}
