#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "origami/geometry.hpp"
#include "origami/scalar.hpp"

namespace origami {

struct QuadraticInteger {
  bool holds = false;
  Rational trace;  // x + conj x
  Rational norm;   // x conj x, when rational
  bool norm_rational = false;
  // With holds: x^2 = lambda x + mu.
  Integer lambda;
  Integer mu;
};

// x is a root of a monic integer quadratic iff x + conj x and x conj x are
// rational integers. Throws DegenerateReal for real x.
QuadraticInteger quadratic_integer_test(const ExactScalar& x);

// The lattice Z + xZ.
struct LatticeDescriptor {
  ExactScalar x;
  ExactScalar re;                  // a
  std::optional<ExactScalar> im;   // b, nonzero; absent for parametric x

  // Throws DegenerateReal for real x.
  static LatticeDescriptor from_generator(const ExactScalar& x);
  // Integers (m, n) with z = m + n x, or nothing when z is off the lattice.
  std::optional<std::pair<Integer, Integer>> coordinates(const ExactScalar& z) const;
  bool contains(const ExactScalar& z) const { return coordinates(z).has_value(); }
};

// Z + xZ = Z + yZ. With x = a + bi, y = c + di: b = d and a - c in Z, or
// b = -d and a + c in Z. Throws DegenerateReal for real input.
bool same_lattice(const ExactScalar& x, const ExactScalar& y);

// tan(theta) / (tan(theta) - tan(phi)) + i tan(phi) tan(theta) / (tan(theta) - tan(phi)):
// where the line through 0 with angle phi meets the line through 1 with angle
// theta. A vertical theta or phi falls back to the direct intersection.
// Throws ParallelLines when the two angles coincide.
ExactScalar tangent_point(const UnitAngle& theta, const UnitAngle& phi);

struct CertificateTerm {
  std::size_t generator = 0;
  std::vector<unsigned> exponents;  // one per projection
  Integer coefficient;
};

// sum coefficient * prod projections^exponents * generator. When `product`
// is set the sum claims to equal generators[i] * generators[j].
struct Certificate {
  std::optional<std::pair<std::size_t, std::size_t>> product;
  std::vector<CertificateTerm> terms;

  unsigned degree() const;
};

struct CertificateContext {
  std::vector<ExactScalar> generators;
  std::vector<ExactScalar> projections;
};

// Exact value of the certificate's sum. Throws UnknownGenerator when a term
// refers to a generator or projection missing from the context.
ExactScalar evaluate(const Certificate& cert, const CertificateContext& ctx);
// The sum equals the claimed product.
bool verify_certificate(const Certificate& cert, const CertificateContext& ctx);
// The sum equals `target`.
bool verify_certificate(const Certificate& cert, const CertificateContext& ctx, const ExactScalar& target);

struct MembershipProblem {
  ExactScalar target;
  std::vector<ExactScalar> generators;
  std::vector<ExactScalar> projections;
  unsigned degree_bound = 3;
};

// A decomposition of the target as a Z[P]-combination of the generators with
// projection monomials of total degree at most the bound, or nothing when no
// such decomposition exists within the bound.
std::optional<Certificate> membership(const MembershipProblem& problem);

// Exponent vectors over `variables` projections of total degree at most
// `degree`, by degree and then lexicographically (largest first).
std::vector<std::vector<unsigned>> exponent_vectors(std::size_t variables, unsigned degree);

namespace verdict {

struct Ring {
  std::vector<Certificate> certificates;
};

struct NotRing {
  ExactScalar x;  // failed the quadratic-integer test
  QuadraticInteger test;
};

struct Unknown {
  unsigned degree_bound = 0;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;
  std::vector<Certificate> resolved;
};

}  // namespace verdict

struct RingVerdict {
  std::variant<verdict::Ring, verdict::NotRing, verdict::Unknown> result;
  CertificateContext context;
  // Generator names aligned with context.generators ("1", "x", "z1", ...).
  std::vector<std::string> generator_names;

  bool is_ring() const { return std::holds_alternative<verdict::Ring>(result); }
  bool is_not_ring() const { return std::holds_alternative<verdict::NotRing>(result); }
  bool is_unknown() const { return std::holds_alternative<verdict::Unknown>(result); }
};

// Generators [1, z1, z2, ...] over the primary monomials and the Z[P] basis
// used by check_ring for |U| >= 4.
CertificateContext module_context(const AngleSet& angles);

// |U| = 3: Ring iff x = I_{u,v}(0, 1) is a quadratic integer, else NotRing.
// |U| >= 4: Ring when every product z_i z_j of primary monomials has a
// certificate of degree at most `degree_bound`, else Unknown.
// Throws UnsupportedConfiguration when 1 is not in U or |U| < 3.
RingVerdict check_ring(const AngleSet& angles, unsigned degree_bound);

// The three-angle generator x = I_{u,v}(0, 1), u and v the angles other than 1.
ExactScalar lattice_generator(const AngleSet& angles);

}  // namespace origami
