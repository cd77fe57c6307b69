#include "origami/ring_analysis.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "origami/construction.hpp"
#include "origami/errors.hpp"
#include "origami/integer_linear.hpp"

namespace origami {

namespace {

void require_non_real(const ExactScalar& x, const char* what) {
  if (is_real(x)) throw DegenerateReal(std::string(what) + ": value is real: " + to_string(x));
}

// i in Q(zeta_m), m = lcm(order of like, 4).
ExactScalar imaginary_unit_for(const ExactScalar& like) {
  long order = 4;
  if (const auto* c = like.get_if<CyclotomicElement>()) order = std::lcm(c->order(), 4L);
  else if (like.backend() == Backend::parametric)
    throw UnsupportedConfiguration("i is not available in the parametric backend");
  return ExactScalar(CyclotomicElement::root_of_unity(order, order / 4));
}

}  // namespace

QuadraticInteger quadratic_integer_test(const ExactScalar& x) {
  require_non_real(x, "quadratic integer test");
  QuadraticInteger q;
  const ExactScalar xc = conj(x);
  const ExactScalar trace = x + xc;
  const ExactScalar norm = x * xc;
  const bool trace_rational = is_rational(trace);
  q.norm_rational = is_rational(norm);
  if (trace_rational) q.trace = rational_value(trace);
  if (q.norm_rational) q.norm = rational_value(norm);
  q.holds = trace_rational && q.norm_rational && is_integer(q.trace) && is_integer(q.norm);
  if (q.holds) {
    q.lambda = q.trace.get_num();
    q.mu = -q.norm.get_num();
  }
  return q;
}

LatticeDescriptor LatticeDescriptor::from_generator(const ExactScalar& x) {
  require_non_real(x, "lattice generator");
  LatticeDescriptor d{x, real_part(x), std::nullopt};
  if (x.backend() != Backend::parametric) d.im = imag_part(x);
  return d;
}

std::optional<std::pair<Integer, Integer>> LatticeDescriptor::coordinates(const ExactScalar& z) const {
  // z = m + n x with m, n real forces n = (z - conj z) / (x - conj x).
  const ExactScalar n = (z - conj(z)) / (x - conj(x));
  if (!is_integer(n)) return std::nullopt;
  const ExactScalar m = z - n * x;
  if (!is_integer(m)) return std::nullopt;
  return std::make_pair(rational_value(m).get_num(), rational_value(n).get_num());
}

bool same_lattice(const ExactScalar& x, const ExactScalar& y) {
  require_non_real(x, "same_lattice");
  require_non_real(y, "same_lattice");
  // 2bi = x - conj x; 2a = x + conj x.
  const ExactScalar bx = x - conj(x);
  const ExactScalar by = y - conj(y);
  const ExactScalar half(Rational(1, 2));
  if (bx == by) return is_integer((x + conj(x) - y - conj(y)) * half);
  if (bx == -by) return is_integer((x + conj(x) + y + conj(y)) * half);
  return false;
}

ExactScalar tangent_point(const UnitAngle& theta, const UnitAngle& phi) {
  if (theta.equivalent(phi)) throw ParallelLines();
  const ExactScalar zero = ExactScalar::from_rational_like(theta.value() + phi.value(), 0);
  const ExactScalar one = ExactScalar::from_rational_like(zero, 1);
  const ExactScalar direct = intersect(phi, theta, zero, one);

  const ExactScalar i = imaginary_unit_for(theta.value() + phi.value());
  auto tangent = [&](const UnitAngle& a) -> std::optional<ExactScalar> {
    const ExactScalar v = a.value();
    const ExactScalar re2 = v + conj(v);
    if (re2.is_zero()) return std::nullopt;
    return (v - conj(v)) / (i * re2);
  };
  const auto tt = tangent(theta);
  const auto tp = tangent(phi);
  if (!tt || !tp) return direct;
  const ExactScalar d = *tt - *tp;
  const ExactScalar x = *tt / d + i * (*tp * *tt / d);
  if (!(x == direct)) throw Error("tangent formula disagrees with the direct intersection");
  return x;
}

unsigned Certificate::degree() const {
  unsigned d = 0;
  for (const auto& t : terms) d = std::max(d, std::accumulate(t.exponents.begin(), t.exponents.end(), 0u));
  return d;
}

ExactScalar evaluate(const Certificate& cert, const CertificateContext& ctx) {
  ExactScalar sum = ctx.generators.empty() ? ExactScalar(Rational(0))
                                           : ExactScalar::from_rational_like(ctx.generators[0], 0);
  for (const auto& t : cert.terms) {
    if (t.generator >= ctx.generators.size())
      throw UnknownGenerator("certificate refers to generator " + std::to_string(t.generator));
    ExactScalar term = ctx.generators[t.generator] * ExactScalar(Rational(t.coefficient));
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (k >= ctx.projections.size())
        throw UnknownGenerator("certificate refers to projection " + std::to_string(k));
      term *= pow(ctx.projections[k], t.exponents[k]);
    }
    sum += term;
  }
  return sum;
}

bool verify_certificate(const Certificate& cert, const CertificateContext& ctx, const ExactScalar& target) {
  return evaluate(cert, ctx) == target;
}

bool verify_certificate(const Certificate& cert, const CertificateContext& ctx) {
  if (!cert.product) throw Error("certificate does not name a product");
  const auto [i, j] = *cert.product;
  if (i >= ctx.generators.size() || j >= ctx.generators.size())
    throw UnknownGenerator("certificate product refers to a missing generator");
  return verify_certificate(cert, ctx, ctx.generators[i] * ctx.generators[j]);
}

std::vector<std::vector<unsigned>> exponent_vectors(std::size_t variables, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(variables, 0);
  // All vectors with total exactly d, first coordinate largest first.
  auto fill = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 >= variables) {
      if (variables) cur[pos] = left;
      if (variables || left == 0) out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  for (unsigned d = 0; d <= degree; ++d) {
    if (variables == 0 && d > 0) break;
    fill(fill, 0, d);
  }
  return out;
}

std::optional<Certificate> membership(const MembershipProblem& problem) {
  if (problem.target.is_zero()) return Certificate{};
  if (problem.generators.empty()) throw Error("membership needs at least one generator");

  const auto exps = exponent_vectors(problem.projections.size(), problem.degree_bound);
  std::vector<ExactScalar> mono;
  mono.reserve(exps.size());
  for (const auto& e : exps) {
    ExactScalar v = ExactScalar::from_rational_like(problem.target, 1);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) v *= pow(problem.projections[k], e[k]);
    mono.push_back(std::move(v));
  }

  // Columns ordered by monomial, then generator, so each degree is a prefix.
  std::vector<ExactScalar> columns;
  std::vector<std::pair<std::size_t, std::size_t>> labels;  // (monomial, generator)
  std::vector<std::size_t> prefix_end(problem.degree_bound + 1, 0);
  for (std::size_t m = 0; m < exps.size(); ++m) {
    const unsigned deg = std::accumulate(exps[m].begin(), exps[m].end(), 0u);
    for (std::size_t g = 0; g < problem.generators.size(); ++g) {
      columns.push_back(mono[m] * problem.generators[g]);
      labels.emplace_back(m, g);
    }
    for (unsigned d = deg; d <= problem.degree_bound; ++d) prefix_end[d] = columns.size();
  }

  for (unsigned d = 0; d <= problem.degree_bound; ++d) {
    const std::size_t ncols = prefix_end[d];
    if (ncols == 0) continue;
    if (d > 0 && ncols == prefix_end[d - 1]) continue;
    std::vector<ExactScalar> values(columns.begin(), columns.begin() + static_cast<long>(ncols));
    values.push_back(problem.target);
    const auto coords = linearize(values);
    std::size_t width = 0;
    for (const auto& c : coords) width = std::max(width, c.size());
    RationalMatrix a(width, std::vector<Rational>(ncols));
    std::vector<Rational> b(width);
    for (std::size_t c = 0; c < ncols; ++c)
      for (std::size_t r = 0; r < coords[c].size(); ++r) a[r][c] = coords[c][r];
    for (std::size_t r = 0; r < coords.back().size(); ++r) b[r] = coords.back()[r];

    const auto sol = solve_integer(a, b);
    if (!sol) continue;
    Certificate cert;
    for (std::size_t c = 0; c < ncols; ++c) {
      if ((*sol)[c] == 0) continue;
      cert.terms.push_back({labels[c].second, exps[labels[c].first], (*sol)[c]});
    }
    return cert;
  }
  return std::nullopt;
}

CertificateContext module_context(const AngleSet& angles) {
  CertificateContext ctx;
  ctx.generators.push_back(angles.one());
  for (const auto& m : primary_monomials(angles)) ctx.generators.push_back(m.value);
  ctx.projections = projection_set(angles).basis;
  return ctx;
}

ExactScalar lattice_generator(const AngleSet& angles) {
  const auto others = angles.non_one_by_argument();
  if (others.size() != 2 || !angles.contains_one())
    throw UnsupportedConfiguration("a lattice generator needs U = {1, u, v}");
  return intersect(others[0], others[1], angles.zero(), angles.one());
}

RingVerdict check_ring(const AngleSet& angles, unsigned degree_bound) {
  if (!angles.contains_one())
    throw UnsupportedConfiguration("ring analysis requires the direction 1 in U");
  if (angles.size() < 3) throw UnsupportedConfiguration("ring analysis requires at least three angles");

  RingVerdict out;
  if (angles.size() == 3) {
    const ExactScalar x = lattice_generator(angles);
    out.context.generators = {angles.one(), x};
    out.generator_names = {"1", "x"};
    const QuadraticInteger q = quadratic_integer_test(x);
    if (!q.holds) {
      out.result = verdict::NotRing{x, q};
      return out;
    }
    Certificate cert;
    cert.product = std::make_pair(std::size_t{1}, std::size_t{1});
    if (q.lambda != 0) cert.terms.push_back({1, {}, q.lambda});
    if (q.mu != 0) cert.terms.push_back({0, {}, q.mu});
    out.result = verdict::Ring{{std::move(cert)}};
    return out;
  }

  out.context = module_context(angles);
  out.generator_names.push_back("1");
  for (std::size_t k = 1; k < out.context.generators.size(); ++k)
    out.generator_names.push_back("z" + std::to_string(k));

  std::vector<std::pair<std::size_t, std::size_t>> products;
  for (std::size_t i = 1; i < out.context.generators.size(); ++i)
    for (std::size_t j = i; j < out.context.generators.size(); ++j) products.emplace_back(i, j);

  std::vector<std::future<std::optional<Certificate>>> tasks;
  for (const auto& [i, j] : products) {
    MembershipProblem problem{out.context.generators[i] * out.context.generators[j], out.context.generators,
                              out.context.projections, degree_bound};
    tasks.push_back(std::async(std::launch::async, [problem = std::move(problem)] { return membership(problem); }));
  }

  verdict::Unknown unknown{degree_bound, {}, {}};
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    auto cert = tasks[k].get();
    if (!cert) {
      unknown.unresolved.push_back(products[k]);
      continue;
    }
    cert->product = products[k];
    unknown.resolved.push_back(std::move(*cert));
  }
  if (unknown.unresolved.empty())
    out.result = verdict::Ring{std::move(unknown.resolved)};
  else
    out.result = std::move(unknown);
  return out;
}

}  // namespace origami
