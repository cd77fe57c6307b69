#pragma once

#include <optional>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A n = b for an integer vector n, where A is m x k with rational
// entries (rows are equations). Returns a solution iff one exists.
//
// Rows are scaled to integers, then A is brought to lower column echelon form
// H = A V by unimodular column operations; H y = b is solved by forward
// substitution and n = V y.
std::optional<std::vector<Integer>> solve_integer(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace origami
