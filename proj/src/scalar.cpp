#include "origami/scalar.hpp"

#include <numeric>

#include "origami/errors.hpp"

namespace origami {

std::string to_string(Backend b) {
  switch (b) {
    case Backend::rational:
      return "rational";
    case Backend::cyclotomic:
      return "cyclotomic";
    case Backend::parametric:
      return "parametric";
  }
  return "?";
}

namespace {

template <typename T>
T lift(const Rational& q, const T& like);

template <>
Rational lift(const Rational& q, const Rational&) {
  return q;
}

template <>
CyclotomicElement lift(const Rational& q, const CyclotomicElement& like) {
  return CyclotomicElement(like.order(), q);
}

template <>
ParamRational lift(const Rational& q, const ParamRational&) {
  return ParamRational(q);
}

// Applies op to the two operands after promoting a rational operand into the
// other's representation.
template <typename Op>
ExactScalar binary(const ExactScalar& a, const ExactScalar& b, Op op) {
  return std::visit(
      [&](const auto& x, const auto& y) -> ExactScalar {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return ExactScalar(op(x, y));
        } else if constexpr (std::is_same_v<X, Rational>) {
          return ExactScalar(op(lift(x, y), y));
        } else if constexpr (std::is_same_v<Y, Rational>) {
          return ExactScalar(op(x, lift(y, x)));
        } else {
          throw BackendMismatch("cannot combine cyclotomic and parametric values");
        }
      },
      a.storage(), b.storage());
}

long storage_order(const ExactScalar& a) {
  if (const auto* c = a.get_if<CyclotomicElement>()) return c->order();
  return 1;
}

}  // namespace

ExactScalar ExactScalar::from_rational_like(const ExactScalar& like, const Rational& q) {
  return std::visit([&](const auto& x) -> ExactScalar { return ExactScalar(lift(q, x)); },
                    like.value_);
}

bool ExactScalar::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return x == 0;
        else
          return x.is_zero();
      },
      value_);
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) {
    using T = std::decay_t<decltype(x)>;
    return T(x + y);
  });
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) {
    using T = std::decay_t<decltype(x)>;
    return T(x - y);
  });
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) {
    using T = std::decay_t<decltype(x)>;
    return T(x * y);
  });
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * inv(b); }

ExactScalar operator-(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> ExactScalar {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return ExactScalar(Rational(-x));
        else
          return ExactScalar(-x);
      },
      a.storage());
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.backend() == b.backend()) return a.value_ == b.value_;
  try {
    return (a - b).is_zero();
  } catch (const BackendMismatch&) {
    return false;
  }
}

ExactScalar add(const ExactScalar& a, const ExactScalar& b) { return a + b; }
ExactScalar mul(const ExactScalar& a, const ExactScalar& b) { return a * b; }

ExactScalar inv(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> ExactScalar {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          if (x == 0) throw DivisionByZero();
          return ExactScalar(Rational(1 / x));
        } else {
          return ExactScalar(x.inverse());
        }
      },
      a.storage());
}

ExactScalar conj(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> ExactScalar {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return ExactScalar(x);
        else
          return ExactScalar(x.conj());
      },
      a.storage());
}

ExactScalar pow(const ExactScalar& a, unsigned long e) {
  ExactScalar result = ExactScalar::from_rational_like(a, 1);
  ExactScalar base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool is_real(const ExactScalar& a) { return conj(a) == a; }

bool is_rational(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> bool {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return true;
        else
          return x.is_rational();
      },
      a.storage());
}

Rational rational_value(const ExactScalar& a) {
  if (!is_rational(a)) throw Error("value is not rational: " + to_string(a));
  return std::visit(
      [](const auto& x) -> Rational {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return x;
        else
          return x.rational_value();
      },
      a.storage());
}

bool is_integer(const ExactScalar& a) { return is_rational(a) && is_integer(rational_value(a)); }

int leading_sign(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> int {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return sgn(x);
        else
          return x.leading_sign();
      },
      a.storage());
}

ExactScalar real_part(const ExactScalar& a) { return (a + conj(a)) * ExactScalar(Rational(1, 2)); }

ExactScalar imag_part(const ExactScalar& a) {
  if (a.backend() == Backend::parametric)
    throw UnsupportedConfiguration("imaginary part is not available for parametric values");
  if (a.backend() == Backend::rational) return ExactScalar(Rational(0));
  const auto& c = *a.get_if<CyclotomicElement>();
  const long m = std::lcm(c.order(), 4L);
  ExactScalar x(c.embed(m));
  // -i/2 * (x - conj x); i = zeta_m^{m/4}.
  ExactScalar minus_half_i(CyclotomicElement::root_of_unity(m, m / 4) *
                           CyclotomicElement(m, Rational(-1, 2)));
  return minus_half_i * (x - conj(x));
}

int certified_sign(const ExactScalar& real_value) {
  if (real_value.backend() == Backend::parametric)
    throw UnsupportedConfiguration("sign of a parametric value needs a specialization");
  if (real_value.is_zero()) return 0;
  if (const auto* q = real_value.get_if<Rational>()) return sgn(*q);
  for (long prec = 64;; prec *= 2) {
    ComplexInterval box = to_interval(real_value, prec);
    if (box.re.strictly_positive()) return 1;
    if (box.re.strictly_negative()) return -1;
    if (prec > (1L << 20)) throw Error("sign refinement did not converge");
  }
}

Integer floor_real(const ExactScalar& real_value) {
  if (const auto* q = real_value.get_if<Rational>()) return floor(*q);
  for (long prec = 64;; prec *= 2) {
    ComplexInterval box = to_interval(real_value, prec);
    mpz_class lo, hi;
    mpfr_get_z(lo.get_mpz_t(), box.re.lo(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), box.re.hi(), MPFR_RNDD);
    if (lo == hi) return lo;
    if (hi - lo == 1) {
      // floor is lo or hi; decide exactly against hi.
      return certified_sign(real_value - ExactScalar(Rational(hi))) >= 0 ? hi : lo;
    }
    if (prec > (1L << 20)) throw Error("floor refinement did not converge");
  }
}

Integer ceil_real(const ExactScalar& real_value) { return -floor_real(-real_value); }

Integer round_real(const ExactScalar& real_value) {
  return floor_real(real_value + ExactScalar(Rational(1, 2)));
}

ComplexInterval to_interval(const ExactScalar& a, long precision_bits,
                            const std::optional<ComplexInterval>& specialization) {
  if (precision_bits < kMinPrecisionBits)
    throw PrecisionTooLow("precision " + std::to_string(precision_bits) +
                          " bits is below the floor of " + std::to_string(kMinPrecisionBits));
  return std::visit(
      [&](const auto& x) -> ComplexInterval {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          return ComplexInterval(Interval(x, precision_bits), Interval(precision_bits));
        } else if constexpr (std::is_same_v<X, CyclotomicElement>) {
          return x.to_interval(precision_bits);
        } else {
          if (!specialization)
            throw UnsupportedConfiguration("parametric value needs a specialization for t");
          return x.to_interval(*specialization);
        }
      },
      a.storage());
}

std::string canonical_key(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return "Q:" + x.get_str();
        else
          return x.canonical_key();
      },
      a.storage());
}

std::string to_string(const ExactScalar& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>)
          return x.get_str();
        else
          return x.to_string();
      },
      a.storage());
}

std::vector<std::vector<Rational>> linearize(std::span<const ExactScalar> values) {
  bool any_param = false;
  bool any_cyclo = false;
  long order = 1;
  for (const auto& v : values) {
    any_param |= v.backend() == Backend::parametric;
    if (v.backend() == Backend::cyclotomic) {
      any_cyclo = true;
      order = std::lcm(order, storage_order(v));
    }
  }
  if (any_param && any_cyclo) throw BackendMismatch("cannot combine cyclotomic and parametric values");

  std::vector<std::vector<Rational>> out;
  out.reserve(values.size());
  if (any_param) {
    Polynomial common(Rational(1));
    std::vector<ParamRational> params;
    for (const auto& v : values) {
      ParamRational p = v.get_if<ParamRational>() ? *v.get_if<ParamRational>()
                                                  : ParamRational(rational_value(v));
      const Polynomial& d = p.denominator();
      Polynomial g = gcd(common, d);
      common = divmod(common * d, g).first;
      params.push_back(std::move(p));
    }
    long width = 0;
    std::vector<Polynomial> scaled;
    for (const auto& p : params) {
      Polynomial s = p.numerator() * divmod(common, p.denominator()).first;
      width = std::max(width, s.degree() + 1);
      scaled.push_back(std::move(s));
    }
    for (const auto& s : scaled) {
      std::vector<Rational> row(static_cast<std::size_t>(width));
      for (long i = 0; i <= s.degree(); ++i) row[static_cast<std::size_t>(i)] = s.coefficient(i);
      out.push_back(std::move(row));
    }
    return out;
  }
  for (const auto& v : values) {
    if (const auto* c = v.get_if<CyclotomicElement>())
      out.push_back(c->embed(order).coordinates());
    else
      out.push_back(CyclotomicElement(order, rational_value(v)).coordinates());
  }
  return out;
}

}  // namespace origami
