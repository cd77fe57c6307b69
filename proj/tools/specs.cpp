#include "specs.hpp"

#include <cctype>
#include <optional>

#include "origami/errors.hpp"

namespace origami::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

AngleSpec numeric_angle(const Rational& pi_fraction) {
  Rational g = pi_fraction - Rational(floor(pi_fraction));
  g.canonicalize();
  return {g == 0 ? "0" : "pi*" + g.get_str(), UnitAngle::from_pi_fraction(g), false};
}

Rational parse_rational_in(std::string_view text, std::string_view context) {
  try {
    return parse_rational(trim(text));
  } catch (const ParseError&) {
    throw ParseError("invalid number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
}

// Splits at commas that are not nested in parentheses.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

// The multiple of pi named by a numeric spec, unreduced; nothing for other specs.
std::optional<Rational> pi_fraction(std::string_view s) {
  if (s == "0") return Rational(0);
  if (starts_with(s, "deg:")) return Rational(parse_rational_in(s.substr(4), s) / 180);
  if (!starts_with(s, "pi")) return std::nullopt;
  const std::string_view rest = s.substr(2);
  if (rest.empty()) return Rational(1);
  if (rest.front() == '*') return parse_rational_in(rest.substr(1), s);
  if (rest.front() == '/') {
    const Rational q = parse_rational_in(rest.substr(1), s);
    if (q == 0) throw ParseError("division by zero in angle spec '" + std::string(s) + "'");
    return Rational(1 / q);
  }
  return std::nullopt;
}

}  // namespace

AngleSpec parse_angle_spec(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty angle spec");
  if (starts_with(s, "param:")) {
    const Rational k = parse_rational_in(s.substr(6), s);
    if (!is_integer(k) || !k.get_num().fits_slong_p())
      throw ParseError("param power must be an integer: '" + std::string(s) + "'");
    const long power = k.get_num().get_si();
    return {"param:" + std::to_string(power), UnitAngle::param_power(power), power != 0};
  }
  if (const auto f = pi_fraction(s)) return numeric_angle(*f);
  throw ParseError("invalid angle spec '" + std::string(s) + "' (expected 0, pi*p/q, deg:<r> or param:<k>)");
}

AngleList parse_angle_list(std::string_view text) {
  std::vector<std::string> normalized;
  std::vector<UnitAngle> angles;
  bool any_param = false;
  bool any_numeric = false;
  for (auto part : split_top_level(text, ',')) {
    AngleSpec spec = parse_angle_spec(part);
    if (spec.parametric) any_param = true;
    else if (spec.normalized != "0" && spec.normalized != "param:0") any_numeric = true;
    normalized.push_back(spec.normalized);
    angles.push_back(spec.angle);
  }
  if (any_param && any_numeric) throw ParseError("parametric and numeric angles cannot be mixed");
  if (any_param)
    for (auto& n : normalized)
      if (n == "0") n = "param:0";
  try {
    return {normalized, AngleSet(angles)};
  } catch (const BackendMismatch& e) {
    throw ParseError(e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("invalid angle set: ") + e.what());
  }
}

namespace {

ExactScalar parse_atom(std::string_view atom, std::string_view context) {
  atom = trim(atom);
  if (atom == "i") return ExactScalar(CyclotomicElement::root_of_unity(4, 1));
  if (starts_with(atom, "e^(") && atom.back() == ')') {
    // The value e^{i pi f} itself, not its sign-normalized direction.
    const std::string_view s = trim(atom.substr(3, atom.size() - 4));
    if (starts_with(s, "param:")) {
      const AngleSpec spec = parse_angle_spec(s);
      const long k = std::stol(spec.normalized.substr(6));
      return ExactScalar(ParamRational::power_of_t(k));
    }
    const auto f = pi_fraction(s);
    if (!f) throw ParseError("invalid angle '" + std::string(s) + "' in '" + std::string(context) + "'");
    Rational g = *f - 2 * Rational(floor(*f / 2));
    g.canonicalize();
    if (g == 0) return ExactScalar(Rational(1));
    if (g == 1) return ExactScalar(Rational(-1));
    return ExactScalar(CyclotomicElement::root_of_unity(2 * g.get_den().get_si(), g.get_num().get_si()));
  }
  if (starts_with(atom, "I(") && atom.back() == ')') {
    const auto args = split_top_level(atom.substr(2, atom.size() - 3), ',');
    if (args.size() != 2) throw ParseError("I(...) takes two angles in '" + std::string(context) + "'");
    const UnitAngle a = parse_angle_spec(args[0]).angle;
    const UnitAngle b = parse_angle_spec(args[1]).angle;
    const ExactScalar like = a.value() + b.value();
    return intersect(a, b, ExactScalar::from_rational_like(like, 0), ExactScalar::from_rational_like(like, 1));
  }
  throw ParseError("invalid atom '" + std::string(atom) + "' in '" + std::string(context) + "'");
}

bool is_atom_start(std::string_view s) { return s == "i" || starts_with(s, "e^(") || starts_with(s, "I("); }

}  // namespace

ExactScalar parse_point_spec(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty point spec");
  // Split into signed terms at top-level + and -, leaving exponents like 1e-3 intact.
  std::vector<std::pair<int, std::string_view>> terms;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0) {
      const bool exponent = i >= 2 && (s[i - 1] == 'e' || s[i - 1] == 'E') &&
                            std::isdigit(static_cast<unsigned char>(s[i - 2]));
      if (exponent) continue;
      const std::string_view prev = trim(s.substr(start, i - start));
      if (!prev.empty()) terms.emplace_back(sign, prev);
      else if (!terms.empty() || start != 0) throw ParseError("dangling operator in '" + std::string(s) + "'");
      sign = c == '-' ? -1 : 1;
      start = i + 1;
    }
  }
  const std::string_view last = trim(s.substr(start));
  if (last.empty()) throw ParseError("dangling operator in '" + std::string(s) + "'");
  terms.emplace_back(sign, last);

  ExactScalar sum(Rational(0));
  try {
    for (const auto& [sg, term] : terms) {
      ExactScalar value;
      const auto star = split_top_level(term, '*');
      if (star.size() == 2) {
        value = ExactScalar(parse_rational_in(star[0], s)) * parse_atom(star[1], s);
      } else if (star.size() == 1 && is_atom_start(trim(term))) {
        value = parse_atom(term, s);
      } else if (star.size() == 1) {
        value = ExactScalar(parse_rational_in(term, s));
      } else {
        throw ParseError("too many factors in term '" + std::string(term) + "'");
      }
      sum = sg < 0 ? sum - value : sum + value;
    }
  } catch (const BackendMismatch& e) {
    throw ParseError(e.what());
  } catch (const ParallelLines& e) {
    throw ParseError(std::string("in '") + std::string(s) + "': " + e.what());
  }
  return sum;
}

std::pair<Rational, Rational> parse_complex(std::string_view text) {
  const auto parts = split_top_level(text, ',');
  if (parts.size() != 2) throw ParseError("expected 're,im', got '" + std::string(text) + "'");
  return {parse_rational_in(parts[0], text), parse_rational_in(parts[1], text)};
}

}  // namespace origami::cli
