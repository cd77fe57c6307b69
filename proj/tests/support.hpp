#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "origami/construction.hpp"
#include "origami/geometry.hpp"
#include "origami/scalar.hpp"

namespace origami::fixtures {

inline CyclotomicElement zeta(long n, long k = 1) { return CyclotomicElement::root_of_unity(n, k); }

inline AngleSet pi_angles(const std::vector<Rational>& fractions) {
  std::vector<UnitAngle> v;
  for (const auto& f : fractions) v.push_back(UnitAngle::from_pi_fraction(f));
  return AngleSet(v);
}

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// U = {1, e^{i pi/6}, e^{i pi/3}, e^{i pi/2}}.
inline AngleSet example_one() { return pi_angles({0, q(1, 6), q(1, 3), q(1, 2)}); }

// U = {1, t, t^2, t^3}.
inline AngleSet theta_family() {
  return AngleSet({UnitAngle::param_power(0), UnitAngle::param_power(1), UnitAngle::param_power(2),
                   UnitAngle::param_power(3)});
}

// sqrt(3) = zeta_12 + zeta_12^{-1}.
inline ExactScalar sqrt3() { return ExactScalar(zeta(12, 1) + zeta(12, 11)); }

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long max_num = 9, long max_den = 6) {
    return q(integer(-max_num, max_num), integer(1, max_den));
  }

  // A random element of Q(zeta_n) with small coefficients.
  ExactScalar cyclotomic(long n, long terms = 3) {
    CyclotomicElement v(n);
    for (long k = 0; k < terms; ++k) v = v + CyclotomicElement(n, rational()) * zeta(n, integer(0, n - 1));
    return ExactScalar(v);
  }

  // A random nonzero real element of Q(zeta_n): r + s (zeta^k + zeta^-k).
  ExactScalar real_cyclotomic(long n) {
    for (;;) {
      const long k = integer(0, n - 1);
      ExactScalar v = ExactScalar(CyclotomicElement(n, rational())) +
                      ExactScalar(CyclotomicElement(n, rational())) * ExactScalar(zeta(n, k) + zeta(n, n - k));
      if (!v.is_zero()) return v;
    }
  }

  // A random unit direction e^{i pi a/b}, with 2b dividing n.
  UnitAngle angle(long n) { return UnitAngle::from_pi_fraction(q(integer(0, n - 1) * 2, n)); }

  // Two inequivalent random directions.
  std::pair<UnitAngle, UnitAngle> angle_pair(long n) {
    for (;;) {
      UnitAngle a = angle(n), b = angle(n);
      if (!a.equivalent(b)) return {a, b};
    }
  }

  ParamRational param() {
    auto poly = [&] {
      std::vector<Rational> c;
      const long deg = integer(0, 3);
      for (long k = 0; k <= deg; ++k) c.push_back(q(integer(-4, 4)));
      return Polynomial(c);
    };
    Polynomial d = poly();
    while (d.degree() < 0) d = poly();
    return ParamRational(poly(), d);
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

// Gauss-Jordan elimination over Q on an augmented system (possibly
// overdetermined). Returns the unique solution, or nothing when the system is
// inconsistent or underdetermined.
inline std::optional<std::vector<Rational>> oracle_solve(std::vector<std::vector<Rational>> rows,
                                                         std::size_t unknowns) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) return std::nullopt;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Rational f = rows[o][c];
      for (std::size_t k = 0; k <= unknowns; ++k) rows[o][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots.size() != unknowns) return std::nullopt;
  for (std::size_t o = r; o < rows.size(); ++o)
    if (rows[o][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) x[k] = rows[k][unknowns];
  return x;
}

// Intersection of p + R alpha with q + R beta in Q(zeta_n), solved as a
// linear system in the rational coordinates of the real unknowns s and t:
// p + s alpha = q + t beta, s = conj s, t = conj t.
inline CyclotomicElement oracle_intersection(long n, const CyclotomicElement& alpha, const CyclotomicElement& beta,
                                             const CyclotomicElement& p, const CyclotomicElement& q) {
  const std::size_t phi = static_cast<std::size_t>(CyclotomicElement(n).degree());
  const std::size_t unknowns = 2 * phi;
  auto basis = [&](std::size_t k) {
    std::vector<Rational> c(phi);
    c[k] = 1;
    return CyclotomicElement(n, c);
  };
  std::vector<std::vector<Rational>> rows;
  const auto rhs = (q - p).coordinates();
  // s alpha - t beta = q - p
  for (std::size_t r = 0; r < phi; ++r) {
    std::vector<Rational> row(unknowns + 1);
    for (std::size_t k = 0; k < phi; ++k) {
      row[k] = (basis(k) * alpha).coordinates()[r];
      row[phi + k] = -(basis(k) * beta).coordinates()[r];
    }
    row[unknowns] = rhs[r];
    rows.push_back(std::move(row));
  }
  // s - conj s = 0 and t - conj t = 0
  for (std::size_t block = 0; block < 2; ++block) {
    for (std::size_t r = 0; r < phi; ++r) {
      std::vector<Rational> row(unknowns + 1);
      for (std::size_t k = 0; k < phi; ++k) {
        const auto e = basis(k);
        row[block * phi + k] = (e - e.conj()).coordinates()[r];
      }
      rows.push_back(std::move(row));
    }
  }
  const auto sol = oracle_solve(rows, unknowns);
  if (!sol) throw std::runtime_error("oracle system has no unique solution");
  CyclotomicElement s(n, std::vector<Rational>(sol->begin(), sol->begin() + static_cast<long>(phi)));
  return p + s * alpha;
}

// (X - x)(X - conj x), expanded: coefficients of X^0, X^1, X^2.
inline std::vector<ExactScalar> oracle_quadratic(const ExactScalar& x) {
  const std::vector<ExactScalar> a{-x, ExactScalar::from_rational_like(x, 1)};
  const std::vector<ExactScalar> b{-conj(x), ExactScalar::from_rational_like(x, 1)};
  std::vector<ExactScalar> out(3, ExactScalar::from_rational_like(x, 0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

// Points of Z + (a + bi)Z inside |re| <= bound_re, |im| <= bound_im, as
// exact (re, im) pairs. Complete for the box (b != 0).
inline std::set<std::pair<Rational, Rational>> lattice_points_in_box(const Rational& a, const Rational& b,
                                                                     const Rational& bound_re,
                                                                     const Rational& bound_im) {
  std::set<std::pair<Rational, Rational>> pts;
  const Rational babs = abs(b);
  const Integer nmax = floor(Rational(bound_im / babs));
  for (Integer n = -nmax; n <= nmax; ++n) {
    const Rational shift = Rational(n) * a;
    const Integer mlo = ceil(Rational(-bound_re - shift));
    const Integer mhi = floor(Rational(bound_re - shift));
    for (Integer m = mlo; m <= mhi; ++m) {
      Rational re = Rational(m) + shift;
      Rational im = Rational(n) * b;
      re.canonicalize();
      im.canonicalize();
      pts.emplace(re, im);
    }
  }
  return pts;
}

// a + bi in Q(zeta_4).
inline ExactScalar gaussian(const Rational& a, const Rational& b) {
  return ExactScalar(CyclotomicElement(4, a) + CyclotomicElement(4, b) * zeta(4, 1));
}

}  // namespace origami::fixtures
