#pragma once

#include <optional>
#include <vector>

#include "origami/rational.hpp"

namespace origami::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves the square system a * x = b by Gaussian elimination over Q.
// Returns nullopt when a is singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

}  // namespace origami::detail
