#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "origami/geometry.hpp"
#include "origami/scalar.hpp"

namespace origami::cli {

struct AngleSpec {
  std::string normalized;  // "0", "pi*p/q" or "param:k"
  UnitAngle angle;
  bool parametric = false;
};

// "0" | "pi*p/q" (also "pi", "pi*p", "pi/q") | "deg:<rational>" | "param:<k>".
// Numeric angles are reduced modulo pi. Throws ParseError.
AngleSpec parse_angle_spec(std::string_view text);

struct AngleList {
  std::vector<std::string> normalized;
  AngleSet set;
};

// Comma-separated angle specs. Parametric and numeric specs may not be mixed,
// except that "0" is accepted alongside param powers.
AngleList parse_angle_list(std::string_view text);

// A sum of terms joined by + and -. Each term is a rational, an atom, or
// "<rational>*<atom>"; atoms are "i", "e^(<angle>)" and "I(<angle>,<angle>)",
// the last meaning the intersection I_{a,b}(0, 1).
ExactScalar parse_point_spec(std::string_view text);

// "re,im" with rational or decimal parts.
std::pair<Rational, Rational> parse_complex(std::string_view text);

}  // namespace origami::cli
