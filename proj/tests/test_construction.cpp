#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "origami/construction.hpp"
#include "origami/errors.hpp"
#include "support.hpp"

using namespace origami;
using origami::fixtures::q;
using origami::fixtures::Rng;
using origami::fixtures::zeta;

namespace {

std::set<std::string> keys_of(const GenerationSet& g) {
  std::set<std::string> out;
  for (const auto& [k, rec] : g.points()) out.insert(k);
  return out;
}

GenerationSet generation(const AngleSet& u, int depth) {
  GenerationSet g = GenerationSet::initial(u);
  for (int d = 0; d < depth; ++d) g = step(g, u, 1000000);
  return g;
}

CyclotomicElement lift(const ExactScalar& x, long n) {
  if (const auto* c = x.get_if<CyclotomicElement>()) return c->embed(n);
  return CyclotomicElement(n, rational_value(x));
}

// S_1 from first principles: 0, 1 and every intersection of the line through
// 0 along a with the line through 1 along b, each solved as a linear system.
std::set<std::string> oracle_first_generation(const AngleSet& u) {
  const long n = u.order();
  std::set<std::string> out{canonical_key(u.zero()), canonical_key(u.one())};
  const CyclotomicElement zero(n), one(n, q(1));
  for (const auto& a : u)
    for (const auto& b : u) {
      if (a.equivalent(b)) continue;
      const CyclotomicElement z = fixtures::oracle_intersection(n, lift(a.value(), n), lift(b.value(), n), zero, one);
      out.insert(canonical_key(ExactScalar(z)));
    }
  return out;
}

}  // namespace

TEST(GenerationTest, InitialSet) {
  const AngleSet u = fixtures::example_one();
  const GenerationSet g = GenerationSet::initial(u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.depth(), 0);
  EXPECT_TRUE(g.contains(u.zero()));
  EXPECT_TRUE(g.contains(u.one()));
  // Keys live in the ambient field of U, so a bare rational does not match.
  EXPECT_FALSE(g.contains(ExactScalar(q(0))));
}

TEST(GenerationTest, ExampleOneSizes) {
  const AngleSet u = fixtures::example_one();
  EXPECT_EQ(generation(u, 1).size(), 8u);
  EXPECT_EQ(generation(u, 2).size(), 84u);
}

TEST(GenerationTest, FirstGenerationMatchesOracle) {
  for (const auto& u : {fixtures::example_one(), fixtures::pi_angles({0, q(1, 6), q(1, 4), q(1, 3)}),
                        fixtures::pi_angles({0, q(1, 5), q(1, 2)}), fixtures::pi_angles({q(1, 8), q(5, 8)})}) {
    EXPECT_EQ(keys_of(generation(u, 1)), oracle_first_generation(u));
  }
}

TEST(GenerationTest, ThreeAnglesFirstGeneration) {
  const AngleSet u = fixtures::pi_angles({0, q(1, 3), q(2, 3)});
  const ExactScalar x = intersect(u[1], u[2], u.zero(), u.one());
  const GenerationSet g = generation(u, 1);
  EXPECT_EQ(keys_of(g), (std::set<std::string>{canonical_key(u.zero()), canonical_key(u.one()), canonical_key(x),
                                               canonical_key(u.one() - x)}));
}

TEST(GenerationTest, TwoAnglesGiveFourPoints) {
  const AngleSet u = fixtures::pi_angles({q(1, 6), q(1, 2)});
  EXPECT_EQ(generation(u, 1).size(), 4u);
}

TEST(GenerationTest, MonotoneAndDepthRecorded) {
  const AngleSet u = fixtures::example_one();
  const GenerationSet s1 = generation(u, 1);
  const GenerationSet s2 = step(s1, u, 1000000);
  for (const auto& [k, rec] : s1.points()) {
    ASSERT_TRUE(s2.contains_key(k));
    EXPECT_EQ(s2.points().at(k).depth, rec.depth);
  }
  for (const auto& [k, rec] : s2.points()) {
    EXPECT_EQ(rec.depth, s1.contains_key(k) ? rec.depth : 2);
  }
}

// z -> 1 - z maps every line with direction a to one with direction a.
TEST(GenerationTest, ClosedUnderComplement) {
  for (const auto& u : {fixtures::example_one(), fixtures::theta_family()}) {
    const GenerationSet g = generation(u, 2);
    for (const auto& [k, rec] : g.points()) {
      ASSERT_TRUE(g.contains(u.one() - rec.value)) << k;
    }
  }
}

TEST(GenerationTest, IndependentOfAngleOrder) {
  const std::vector<Rational> fr{0, q(1, 6), q(1, 3), q(1, 2)};
  const auto reference = keys_of(generation(fixtures::example_one(), 2));
  std::vector<Rational> perm = fr;
  std::mt19937 gen(5);
  for (int k = 0; k < 4; ++k) {
    std::shuffle(perm.begin(), perm.end(), gen);
    EXPECT_EQ(keys_of(generation(fixtures::pi_angles(perm), 2)), reference);
  }
}

TEST(GenerationTest, Deterministic) {
  const AngleSet u = fixtures::example_one();
  const GenerationSet a = generation(u, 2), b = generation(u, 2);
  ASSERT_EQ(a.size(), b.size());
  auto ia = a.points().begin();
  for (const auto& [k, rec] : b.points()) {
    EXPECT_EQ(ia->first, k);
    ++ia;
  }
}

TEST(ClosureTest, CapExceededKeepsPartial) {
  ConstructionConfig cfg{fixtures::example_one(), 3, 100};
  const ClosureResult r = closure_to_depth(cfg);
  EXPECT_TRUE(r.cap_exceeded());
  ASSERT_EQ(r.generations.size(), 3u);  // S_0, S_1, S_2 complete
  EXPECT_EQ(r.generations.back().size(), 84u);
  EXPECT_EQ(r.partial->size(), 100u);
  for (const auto& [k, rec] : r.generations.back().points()) {
    EXPECT_TRUE(r.partial->contains_key(k));
  }
}

TEST(ClosureTest, WithinCap) {
  ConstructionConfig cfg{fixtures::example_one(), 2, 1000};
  const ClosureResult r = closure_to_depth(cfg);
  EXPECT_FALSE(r.cap_exceeded());
  EXPECT_EQ(r.generations.size(), 3u);
}

TEST(MonomialTest, ElementaryExampleOne) {
  const AngleSet u = fixtures::example_one();
  const auto e = elementary_monomials(u);
  // 0, 1 from pairs with the real direction, then z and 1 - z for three pairs.
  EXPECT_EQ(e.size(), 8u);
  const auto g = generation(u, 1);
  for (const auto& m : e) {
    EXPECT_TRUE(g.contains(m.value));
  }
}

TEST(MonomialTest, PrimaryOrderAndValues) {
  const AngleSet u = fixtures::example_one();
  const auto p = primary_monomials(u);
  ASSERT_EQ(p.size(), 3u);
  const ExactScalar w2(zeta(12, 2));
  EXPECT_EQ(p[0].value, ExactScalar(q(2, 3)) + ExactScalar(q(2, 3)) * w2);
  EXPECT_EQ(p[1].value, ExactScalar(q(1)) + w2);
  EXPECT_EQ(p[2].value, ExactScalar(q(2)) * w2);
}

TEST(MonomialTest, LengthOneIsElementary) {
  for (const auto& u : {fixtures::example_one(), fixtures::pi_angles({0, q(1, 5), q(1, 2)})}) {
    const auto m = monomials_to_length(u, 1);
    const auto e = elementary_monomials(u);
    ASSERT_EQ(m.size(), e.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      EXPECT_EQ(m[k].value, e[k].value);
      EXPECT_EQ(m[k].path.size(), 1u);
    }
  }
}

TEST(MonomialTest, LongerPathsEvaluate) {
  const AngleSet u = fixtures::example_one();
  const auto m = monomials_to_length(u, 2);
  EXPECT_GT(m.size(), elementary_monomials(u).size());
  for (const auto& mono : m) {
    ExactScalar v = u.one();
    for (const auto& [a, b] : mono.path) v = intersect(a, b, u.zero(), v);
    ASSERT_EQ(v, mono.value);
  }
  EXPECT_THROW(monomials_to_length(u, 0), Error);
  EXPECT_THROW(monomials_to_length(u, 3, 20), CapExceeded);
}

TEST(ProjectionSetTest, ExampleOneBasis) {
  const ProjectionSet ps = projection_set(fixtures::example_one());
  ASSERT_EQ(ps.basis.size(), 3u);
  EXPECT_EQ(ps.basis[0], ExactScalar(q(2, 3)));
  EXPECT_EQ(ps.basis[1], ExactScalar(q(3, 2)));
  EXPECT_EQ(ps.basis[2], ExactScalar(q(-2)));
  for (const auto& v : ps.values) {
    EXPECT_TRUE(is_real(v));
  }
}

TEST(ProjectionSetTest, NormalForm) {
  const AngleSet u = fixtures::example_one();
  const ProjectionSet ps = projection_set(u);
  ASSERT_TRUE(ps.normal_form_x.has_value());
  // x lies on the real axis and on the line through I_{u,w}(0,1) along v.
  const auto others = u.non_one_by_argument();
  const ExactScalar z = intersect(others[0], others[2], u.zero(), u.one());
  EXPECT_EQ(*ps.normal_form_x, project_to_real_axis(z, others[1]));
  EXPECT_EQ(*ps.normal_form_x, ExactScalar(q(2, 3)));
  EXPECT_TRUE(ps.normal_form_holds);
}

TEST(ProjectionSetTest, ThreeAnglesProjectTrivially) {
  Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    const auto [a, b] = rng.angle_pair(24);
    if (a.is_one() || b.is_one()) continue;
    const AngleSet u({UnitAngle::from_pi_fraction(0), a, b});
    const ProjectionSet ps = projection_set(u);
    EXPECT_TRUE(ps.nontrivial.empty());
    for (const auto& v : ps.values) {
      EXPECT_TRUE(v.is_zero() || v == u.one());
    }
  }
}

TEST(ProjectionSetTest, ThetaFamilyIsReal) {
  const ProjectionSet ps = projection_set(fixtures::theta_family());
  EXPECT_EQ(ps.basis.size(), 3u);
  for (const auto& v : ps.values) {
    EXPECT_TRUE(is_real(v));
  }
}
