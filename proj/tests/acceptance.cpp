// Acceptance checks, one PASS/FAIL line each. Exit status is the number of
// failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "origami/construction.hpp"
#include "origami/density.hpp"
#include "origami/errors.hpp"
#include "origami/ring_analysis.hpp"
#include "support.hpp"

using namespace origami;
using origami::fixtures::q;
using origami::fixtures::Rng;
using origami::fixtures::zeta;

namespace {

// Collects the first failed check of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

ExactScalar r(const Rational& v) { return ExactScalar(v); }

// Every certificate verifies and evaluates to the expected product.
void expect_products(Check& c, const RingVerdict& v, const std::vector<ExactScalar>& expected_by_pair) {
  const auto* ring = std::get_if<verdict::Ring>(&v.result);
  c.expect(ring != nullptr, "verdict is not Ring");
  if (!ring) return;
  c.expect(ring->certificates.size() == 6, "expected 6 certificates");
  const auto& g = v.context.generators;
  std::size_t k = 0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j, ++k) {
      const auto it = std::find_if(ring->certificates.begin(), ring->certificates.end(), [&](const Certificate& cert) {
        return cert.product == std::pair<std::size_t, std::size_t>{i, j};
      });
      const std::string name = "z" + std::to_string(i) + "z" + std::to_string(j);
      c.expect(it != ring->certificates.end(), "no certificate for " + name);
      if (it == ring->certificates.end()) continue;
      c.expect(verify_certificate(*it, v.context), name + " certificate does not verify");
      c.expect(evaluate(*it, v.context) == expected_by_pair[k], name + " differs from the closed form");
    }
  }
}

Check example_one_goldens() {
  Check c;
  const AngleSet u = fixtures::example_one();
  const ExactScalar s3 = fixtures::sqrt3();
  const ExactScalar e6(zeta(12, 1)), e3(zeta(12, 2));
  const ExactScalar z1 = r(q(2, 3)) * s3 * e6, z2 = s3 * e6, z3 = r(q(2)) * e3;
  const auto prim = primary_monomials(u);
  c.expect(prim.size() == 3, "three primary monomials");
  if (prim.size() != 3) return c;
  c.expect(prim[0].value == z1, "z1");
  c.expect(prim[1].value == z2, "z2");
  c.expect(prim[2].value == z3, "z3");
  const ProjectionSet ps = projection_set(u);
  c.expect(ps.basis == std::vector<ExactScalar>{r(q(2, 3)), r(q(3, 2)), r(q(-2))}, "projections {2/3, 3/2, -2}");
  const ExactScalar one = r(q(1));
  // Pairs in order z1z1, z1z2, z1z3, z2z2, z2z3, z3z3.
  const std::vector<ExactScalar> closed{r(q(2, 3)) * z3,     z3,       r(q(4)) * (z1 - one), r(q(3, 2)) * z3,
                                        r(q(6)) * (z1 - one), r(q(4)) * z3 - r(q(6)) * z1};
  const std::vector<ExactScalar> direct{z1 * z1, z1 * z2, z1 * z3, z2 * z2, z2 * z3, z3 * z3};
  for (std::size_t k = 0; k < 6; ++k) c.expect(closed[k] == direct[k], "closed form " + std::to_string(k));
  expect_products(c, check_ring(u, 3), direct);
  return c;
}

Check theta_family_identities() {
  Check c;
  const AngleSet u = fixtures::theta_family();
  const auto prim = primary_monomials(u);
  const ProjectionSet ps = projection_set(u);
  c.expect(prim.size() == 3 && ps.basis.size() == 3, "three primaries and three projections");
  if (prim.size() != 3 || ps.basis.size() != 3) return c;
  const ExactScalar &z1 = prim[0].value, &z2 = prim[1].value, &z3 = prim[2].value;
  const ExactScalar &p1 = ps.basis[0], &p2 = ps.basis[1], &p3 = ps.basis[2];
  const ExactScalar one(ParamRational(q(1)));
  c.expect(z1 * z2 == z3, "z1 z2 = z3");
  c.expect(z1 * z1 == p1 * z3, "z1^2 = p1 z3");
  c.expect(z2 * z2 == p2 * z3, "z2^2 = p2 z3");
  c.expect(z2 * z3 == p3 * (one - z3), "z2 z3 = p3 (1 - z3)");
  c.expect(z3 * z3 == p3 * p3 * (z3 - z2), "z3^2 = p3^2 (z3 - z2)");
  c.expect(z1 * z3 == p1 * (z2 * z3), "z1 z3 = p1 z2 z3");
  auto poly = [](std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return ExactScalar(ParamRational(Polynomial(c), Polynomial(q(1))));
  };
  c.expect(z3 * z3 == poly({1, 0, 2, 0, 3, 0, 2, 0, 1}), "z3^2 = 1 + 2t^2 + 3t^4 + 2t^6 + t^8");
  c.expect(z2 * z3 == poly({1, 0, 2, 0, 2, 0, 1}), "z2 z3 = 1 + 2t^2 + 2t^4 + t^6");
  expect_products(c, check_ring(u, 3), {z1 * z1, z1 * z2, z1 * z3, z2 * z2, z2 * z3, z3 * z3});
  return c;
}

Check three_angle_criterion() {
  Check c;
  const AngleSet hex = fixtures::pi_angles({0, q(1, 3), q(2, 3)});
  const RingVerdict v = check_ring(hex, 3);
  c.expect(v.is_ring(), "{1, pi/3, 2pi/3} is a ring");
  const ExactScalar x = lattice_generator(hex);
  const auto qi = quadratic_integer_test(x);
  c.expect(qi.holds && qi.lambda == 1 && qi.mu == -1, "x^2 = x - 1");
  const auto oracle = fixtures::oracle_quadratic(x);
  const ExactScalar one = ExactScalar::from_rational_like(x, 1);
  c.expect(oracle[0] == one && oracle[1] == -one && oracle[2] == one, "(X - x)(X - conj x) = X^2 - X + 1");
  if (v.is_ring()) {
    for (const auto& cert : std::get<verdict::Ring>(v.result).certificates)
      c.expect(verify_certificate(cert, v.context), "three-angle certificate verifies");
  }
  c.expect(check_ring(fixtures::pi_angles({0, q(1, 6), q(1, 2)}), 3).is_not_ring(), "{1, pi/6, pi/2} is not a ring");
  return c;
}

Check identity_suite() {
  Check c;
  constexpr long n = 24;
  Rng rng(31);
  const ExactScalar zero(q(0));
  auto lift = [](const ExactScalar& x) {
    if (const auto* e = x.get_if<CyclotomicElement>()) return e->embed(n);
    return CyclotomicElement(n, rational_value(x));
  };
  for (int k = 0; k < 1000; ++k) {
    const auto [u, v] = rng.angle_pair(n);
    const UnitAngle w = rng.angle(n);
    const ExactScalar p = rng.cyclotomic(n), qv = rng.cyclotomic(n), s = rng.real_cyclotomic(n);
    const ExactScalar i = intersect(u, v, p, qv);
    c.expect(i == intersect(v, u, qv, p), "symmetry");
    c.expect(i == intersect(u, v, p, zero) + intersect(v, u, qv, zero), "reduction");
    c.expect(intersect(u, v, s * p + qv, zero) == s * intersect(u, v, p, zero) + intersect(u, v, qv, zero),
             "linearity");
    const UnitAngle wu = UnitAngle::from_value(w.value() * u.value());
    const UnitAngle wv = UnitAngle::from_value(w.value() * v.value());
    c.expect(w.value() * i == intersect(wu, wv, w.value() * p, w.value() * qv), "rotation");
    c.expect(i + intersect(v, u, p, qv) == p + qv, "parallelogram");
    if (k < 500)
      c.expect(i == ExactScalar(fixtures::oracle_intersection(n, lift(u.value()), lift(v.value()), lift(p), lift(qv))),
               "linear-solve oracle");
  }
  return c;
}

Check structure_suite() {
  Check c;
  const AngleSet u = fixtures::example_one();
  // S_2 has only 84 points, so the sample continues into a capped S_3.
  const ClosureResult closure = closure_to_depth({u, 3, 260});
  c.expect(closure.generations.size() == 3 && closure.generations[2].size() == 84, "S_2 has 84 points");
  c.expect(closure.partial.has_value(), "S_3 is capped");
  if (!closure.partial) return c;
  const GenerationSet& sample = *closure.partial;
  c.expect(sample.size() >= 200, "at least 200 sampled points");
  const CertificateContext ctx = module_context(u);
  for (const auto& [key, rec] : sample.points()) {
    const auto cert = membership({rec.value, ctx.generators, ctx.projections, 3});
    c.expect(cert && verify_certificate(*cert, ctx, rec.value), "no certificate for " + key);
  }
  for (const auto& fr : {std::vector<Rational>{0, q(1, 3), q(2, 3)}, std::vector<Rational>{0, q(1, 4), q(1, 2)}}) {
    const AngleSet three = fixtures::pi_angles(fr);
    const auto lattice = LatticeDescriptor::from_generator(lattice_generator(three));
    const ClosureResult s = closure_to_depth({three, 2, 250000});
    for (const auto& [key, rec] : s.generations.back().points())
      c.expect(lattice.contains(rec.value), key + " is off Z + xZ");
  }
  return c;
}

Check density_suite() {
  Check c;
  const AngleSet u = fixtures::example_one();
  Rng rng(77);
  for (int k = 0; k < 100; ++k) {
    const Rational re = q(rng.integer(-2000, 2000), 1000), im = q(rng.integer(-2000, 2000), 1000);
    const DensityWitness w = approximate(re, im, q(1, 1000), u);
    c.expect(witness_within_epsilon(w), "target " + re.get_str() + " + " + im.get_str() + "i");
  }
  return c;
}

Check honest_unknown() {
  Check c;
  const RingVerdict v = check_ring(fixtures::pi_angles({0, q(1, 5), q(1, 4), q(1, 3)}), 3);
  c.expect(v.is_unknown(), "verdict is Unknown");
  if (const auto* unk = std::get_if<verdict::Unknown>(&v.result)) {
    c.expect(!unk->unresolved.empty(), "unresolved products are listed");
    for (const auto& cert : unk->resolved) c.expect(verify_certificate(cert, v.context), "resolved certificate");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Check()> run;
  };
  const Criterion criteria[] = {
      {1, "example-1 goldens", 5, example_one_goldens},
      {2, "parametric identities", 5, theta_family_identities},
      {3, "three-angle criterion", 1, three_angle_criterion},
      {4, "intersection identities", 30, identity_suite},
      {5, "structure", 60, structure_suite},
      {6, "density", 30, density_suite},
      {7, "honest unknown", 120, honest_unknown},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.failure = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.failure.empty() && s > cr.limit_s) result.failure = "over the time limit";
    const bool ok = result.failure.empty();
    failures += !ok;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name, s,
                cr.limit_s, ok ? "" : ": ", result.failure.c_str());
    std::fflush(stdout);
  }
  return failures;
}
