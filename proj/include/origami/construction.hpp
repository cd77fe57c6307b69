#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/errors.hpp"
#include "origami/geometry.hpp"
#include "origami/scalar.hpp"

namespace origami {

struct ConstructionConfig {
  AngleSet angles;
  int max_depth = 3;
  std::size_t max_points = 250000;
};

struct PointRecord {
  ExactScalar value;
  int depth = 0;  // first generation containing the point
};

// One generation S_n, keyed and ordered by canonical key.
class GenerationSet {
 public:
  // S_0 = {0, 1} in the representation of `angles`.
  static GenerationSet initial(const AngleSet& angles);

  int depth() const { return depth_; }
  std::size_t size() const { return points_.size(); }
  const std::map<std::string, PointRecord>& points() const { return points_; }
  bool contains(const ExactScalar& value) const { return contains_key(canonical_key(value)); }
  bool contains_key(const std::string& key) const { return points_.count(key) > 0; }
  std::vector<ExactScalar> values() const;

  // Inserts if absent; returns whether the point was new.
  bool insert(const ExactScalar& value, int depth);
  // As insert, with the canonical key already computed by the caller.
  bool insert_keyed(std::string key, ExactScalar value, int depth);
  void set_depth(int depth) { depth_ = depth; }

 private:
  int depth_ = 0;
  std::map<std::string, PointRecord> points_;
};

// Raised when a point budget is exhausted. Carries the part of the set that
// was built before the budget ran out (when there is one).
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::optional<GenerationSet> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::optional<GenerationSet>& partial() const { return partial_; }

 private:
  std::optional<GenerationSet> partial_;
};

// S_{n+1}: every I_{alpha,beta}(p, q) with alpha != +-beta in `angles` and
// p, q in `g`. Pairs are evaluated concurrently and merged in a fixed order.
// Throws CapExceeded once the result would exceed `cap` points.
GenerationSet step(const GenerationSet& g, const AngleSet& angles, std::size_t cap);

struct ClosureResult {
  std::vector<GenerationSet> generations;  // S_0 .. S_k, all complete
  std::optional<GenerationSet> partial;    // truncated S_{k+1} if the cap was hit

  bool cap_exceeded() const { return partial.has_value(); }
};

ClosureResult closure_to_depth(const ConstructionConfig& config);

struct ElementaryMonomial {
  UnitAngle alpha;
  UnitAngle beta;
  ExactScalar value;  // I_{alpha,beta}(0, 1)
};

// All distinct values I_{alpha,beta}(0, 1) over ordered pairs alpha != +-beta,
// in enumeration order (first pair producing a value is kept).
std::vector<ElementaryMonomial> elementary_monomials(const AngleSet& angles);

// One non-real elementary monomial per unordered pair {a, b} of angles other
// than 1, taken with arg(a) < arg(b): the remaining non-real elementary
// monomials are 1 minus these. With three such angles u < v < w the order is
// I_{u,w}, I_{u,v}, I_{v,w}; otherwise pairs are listed lexicographically.
std::vector<ElementaryMonomial> primary_monomials(const AngleSet& angles);

struct Projection {
  ExactScalar value;
  ExactScalar source;  // the elementary monomial projected
  UnitAngle along;
};

struct ProjectionSet {
  // Every real length-two monomial, including 0 and 1, by first appearance.
  std::vector<ExactScalar> values;
  // The projections other than 0 and 1, each listed once.
  std::vector<Projection> nontrivial;
  // Generators of Z[P]: one of p and 1 - p for each nontrivial projection,
  // preferring projections of primary monomials.
  std::vector<ExactScalar> basis;
  // For |U| = 4 with 1 in U and known arguments u < v < w:
  // x = I_{v,1}(I_{u,w}(0, 1), 0), and whether every projection lies in
  // {0, 1, x, 1/x, x/(x-1)} together with their complements.
  std::optional<ExactScalar> normal_form_x;
  bool normal_form_holds = false;
};

ProjectionSet projection_set(const AngleSet& angles);

struct Monomial {
  std::vector<std::pair<UnitAngle, UnitAngle>> path;
  ExactScalar value;
};

// Monomials of length 1..max_length, deduplicated by value (a value keeps the
// shortest path that reaches it). Throws CapExceeded past `budget` values.
std::vector<Monomial> monomials_to_length(const AngleSet& angles, int max_length,
                                          std::size_t budget = 200000);

}  // namespace origami
