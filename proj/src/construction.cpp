#include "origami/construction.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

namespace origami {

GenerationSet GenerationSet::initial(const AngleSet& angles) {
  GenerationSet g;
  g.insert(angles.zero(), 0);
  g.insert(angles.one(), 0);
  return g;
}

std::vector<ExactScalar> GenerationSet::values() const {
  std::vector<ExactScalar> out;
  out.reserve(points_.size());
  for (const auto& [key, rec] : points_) out.push_back(rec.value);
  return out;
}

bool GenerationSet::insert(const ExactScalar& value, int depth) {
  return insert_keyed(canonical_key(value), value, depth);
}

bool GenerationSet::insert_keyed(std::string key, ExactScalar value, int depth) {
  return points_.try_emplace(std::move(key), PointRecord{std::move(value), depth}).second;
}

namespace {

using KeyedPoints = std::vector<std::pair<std::string, ExactScalar>>;

// All I_{alpha,beta}(p, q) for one pair, via
// I(p, q) = I(p, 0) + I(0, q); the reversed pair gives the same set.
KeyedPoints pair_intersections(const UnitAngle& alpha, const UnitAngle& beta,
                               const std::vector<ExactScalar>& points) {
  Intersector cut(alpha, beta);
  std::vector<ExactScalar> first, second;
  first.reserve(points.size());
  second.reserve(points.size());
  for (const auto& p : points) {
    first.push_back(cut.through_first(p));
    second.push_back(cut.through_second(p));
  }
  std::unordered_map<std::string, std::size_t> seen;
  KeyedPoints out;
  for (const auto& a : first) {
    for (const auto& b : second) {
      ExactScalar z = a + b;
      std::string key = canonical_key(z);
      if (seen.emplace(key, out.size()).second) out.emplace_back(std::move(key), std::move(z));
    }
  }
  return out;
}

}  // namespace

GenerationSet step(const GenerationSet& g, const AngleSet& angles, std::size_t cap) {
  GenerationSet next = g;
  const int depth = g.depth() + 1;
  next.set_depth(depth);
  const std::vector<ExactScalar> points = g.values();

  std::vector<std::future<KeyedPoints>> tasks;
  for (std::size_t i = 0; i < angles.size(); ++i)
    for (std::size_t j = i + 1; j < angles.size(); ++j)
      tasks.push_back(std::async(std::launch::async, pair_intersections, angles[i], angles[j],
                                 std::cref(points)));

  std::vector<KeyedPoints> results;
  results.reserve(tasks.size());
  for (auto& t : tasks) results.push_back(t.get());

  for (auto& batch : results) {
    for (auto& [key, value] : batch) {
      if (next.contains_key(key)) continue;
      if (next.size() >= cap)
        throw CapExceeded("generation " + std::to_string(depth) + " exceeds the cap of " +
                              std::to_string(cap) + " points",
                          next);
      next.insert_keyed(std::move(key), std::move(value), depth);
    }
  }
  return next;
}

ClosureResult closure_to_depth(const ConstructionConfig& config) {
  ClosureResult result;
  result.generations.push_back(GenerationSet::initial(config.angles));
  for (int d = 0; d < config.max_depth; ++d) {
    try {
      result.generations.push_back(step(result.generations.back(), config.angles, config.max_points));
    } catch (const CapExceeded& e) {
      result.partial = e.partial();
      break;
    }
  }
  return result;
}

std::vector<ElementaryMonomial> elementary_monomials(const AngleSet& angles) {
  std::vector<ElementaryMonomial> out;
  std::unordered_map<std::string, bool> seen;
  const ExactScalar zero = angles.zero();
  const ExactScalar one = angles.one();
  for (const auto& a : angles) {
    for (const auto& b : angles) {
      if (a.equivalent(b)) continue;
      ExactScalar z = intersect(a, b, zero, one);
      if (seen.emplace(canonical_key(z), true).second) out.push_back({a, b, std::move(z)});
    }
  }
  return out;
}

std::vector<ElementaryMonomial> primary_monomials(const AngleSet& angles) {
  std::vector<ElementaryMonomial> out;
  std::unordered_map<std::string, bool> seen;
  const auto others = angles.non_one_by_argument();
  const ExactScalar zero = angles.zero();
  const ExactScalar one = angles.one();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (others.size() == 3) {
    // u < v < w: z1 = I_{u,w}, z2 = I_{u,v}, z3 = I_{v,w}.
    pairs = {{0, 2}, {0, 1}, {1, 2}};
  } else {
    for (std::size_t i = 0; i < others.size(); ++i)
      for (std::size_t j = i + 1; j < others.size(); ++j) pairs.emplace_back(i, j);
  }
  for (const auto& [i, j] : pairs) {
    ExactScalar z = intersect(others[i], others[j], zero, one);
    if (is_real(z)) continue;
    // Skip z when z or 1 - z is already listed.
    if (seen.count(canonical_key(z)) || seen.count(canonical_key(one - z))) continue;
    seen.emplace(canonical_key(z), true);
    out.push_back({others[i], others[j], std::move(z)});
  }
  return out;
}

ProjectionSet projection_set(const AngleSet& angles) {
  ProjectionSet ps;
  const ExactScalar zero = angles.zero();
  const ExactScalar one = angles.one();
  std::unordered_map<std::string, bool> seen_value;
  auto add_value = [&](const ExactScalar& v) {
    if (seen_value.emplace(canonical_key(v), true).second) ps.values.push_back(v);
  };
  add_value(zero);
  add_value(one);

  const auto others = angles.non_one_by_argument();
  std::vector<Projection> from_primary;
  std::vector<Projection> from_rest;
  std::unordered_map<std::string, bool> primary_keys;
  const auto primaries = primary_monomials(angles);
  for (const auto& m : primaries) primary_keys.emplace(canonical_key(m.value), true);

  auto project_all = [&](const ExactScalar& z, std::vector<Projection>& into) {
    for (const auto& gamma : others) {
      ExactScalar p = project_to_real_axis(z, gamma);
      add_value(p);
      if (p == zero || p == one) continue;
      into.push_back({p, z, gamma});
    }
  };
  for (const auto& m : primaries) project_all(m.value, from_primary);
  for (const auto& m : elementary_monomials(angles))
    if (!primary_keys.count(canonical_key(m.value))) project_all(m.value, from_rest);

  std::unordered_map<std::string, bool> listed, in_basis;
  for (const auto* group : {&from_primary, &from_rest}) {
    for (const auto& proj : *group) {
      const std::string key = canonical_key(proj.value);
      if (listed.emplace(key, true).second) ps.nontrivial.push_back(proj);
      if (in_basis.count(key) || in_basis.count(canonical_key(one - proj.value))) continue;
      in_basis.emplace(key, true);
      ps.basis.push_back(proj.value);
    }
  }

  if (angles.size() == 4 && angles.contains_one() && angles.ordered() && others.size() == 3) {
    const ExactScalar z = intersect(others[0], others[2], zero, one);
    const ExactScalar x = intersect(others[1], angles.one_angle(), z, zero);
    ps.normal_form_x = x;
    if (!x.is_zero() && !(x == one)) {
      const ExactScalar family[] = {zero, one, x, inv(x), x / (x - one)};
      std::vector<std::string> allowed;
      for (const auto& f : family) {
        allowed.push_back(canonical_key(f));
        allowed.push_back(canonical_key(one - f));
      }
      ps.normal_form_holds = std::all_of(ps.values.begin(), ps.values.end(), [&](const ExactScalar& v) {
        return std::find(allowed.begin(), allowed.end(), canonical_key(v)) != allowed.end();
      });
    }
  }
  return ps;
}

std::vector<Monomial> monomials_to_length(const AngleSet& angles, int max_length, std::size_t budget) {
  if (max_length < 1) throw Error("monomial length must be at least 1");
  std::vector<Monomial> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& e : elementary_monomials(angles)) {
    seen.emplace(canonical_key(e.value), true);
    out.push_back({{{e.alpha, e.beta}}, e.value});
  }
  std::vector<std::pair<std::pair<UnitAngle, UnitAngle>, Intersector>> cuts;
  for (const auto& a : angles)
    for (const auto& b : angles)
      if (!a.equivalent(b)) cuts.push_back({{a, b}, Intersector(a, b)});

  std::size_t frontier_begin = 0;
  for (int len = 2; len <= max_length; ++len) {
    const std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& [pair, cut] : cuts) {
        ExactScalar v = cut.through_second(out[i].value);
        if (!seen.emplace(canonical_key(v), true).second) continue;
        if (out.size() >= budget)
          throw CapExceeded("monomial enumeration exceeds the budget of " + std::to_string(budget),
                            std::nullopt);
        auto path = out[i].path;
        path.push_back(pair);
        out.push_back({std::move(path), std::move(v)});
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace origami
