#include "origami/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "origami/errors.hpp"
#include "rational_linear.hpp"

namespace origami {

namespace {

// Exact quotient of p by a monic divisor; both lowest degree first.
std::vector<Integer> divide_monic(std::vector<Integer> p, const std::vector<Integer>& d) {
  const std::size_t dd = d.size() - 1;
  std::vector<Integer> q(p.size() - dd);
  for (std::size_t i = p.size(); i-- > dd;) {
    const Integer c = p[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * d[j];
  }
  return q;
}

std::vector<Integer> cyclotomic_memo(long n, std::map<long, std::vector<Integer>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_memo(d, memo));
  memo[n] = p;
  return p;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw Error("cyclotomic order must be positive");
  std::map<long, std::vector<Integer>> memo;
  return cyclotomic_memo(n, memo);
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(long order)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {
  const auto phi = static_cast<std::size_t>(degree());
  powers_.reserve(static_cast<std::size_t>(order));
  std::vector<Integer> cur(phi);
  cur[0] = 1;
  powers_.push_back(cur);
  for (long k = 1; k < order; ++k) {
    // Multiply by x and reduce the single overflow term.
    Integer top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * modulus_[j];
    powers_.push_back(cur);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(long order) {
  if (order < 1) throw Error("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
  return slot;
}

const std::vector<Integer>& CyclotomicField::power(long k) const {
  return powers_[static_cast<std::size_t>(((k % order_) + order_) % order_)];
}

void CyclotomicField::reduce(std::vector<Integer>& poly) const {
  const auto phi = static_cast<std::size_t>(degree());
  for (std::size_t i = poly.size(); i-- > phi;) {
    const Integer c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= phi; ++j) poly[i - phi + j] -= c * modulus_[j];
  }
  poly.resize(phi);
}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicField> field,
                                     std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CyclotomicElement::CyclotomicElement(long order)
    : field_(CyclotomicField::get(order)), num_(static_cast<std::size_t>(field_->degree())), den_(1) {}

CyclotomicElement::CyclotomicElement(long order, const Rational& value) : CyclotomicElement(order) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CyclotomicElement::CyclotomicElement(long order, const std::vector<Rational>& coefficients)
    : CyclotomicElement(order) {
  Integer lcm = 1;
  for (const auto& c : coefficients) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> poly(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    poly[i] = coefficients[i].get_num() * (lcm / coefficients[i].get_den());
  std::vector<Integer> acc(static_cast<std::size_t>(degree()));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 0) continue;
    const auto& p = field_->power(static_cast<long>(i));
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += poly[i] * p[j];
  }
  num_ = std::move(acc);
  den_ = lcm;
  normalize();
}

CyclotomicElement CyclotomicElement::root_of_unity(long order, long k) {
  auto field = CyclotomicField::get(order);
  auto num = field->power(k);
  return CyclotomicElement(std::move(field), std::move(num), Integer(1));
}

void CyclotomicElement::normalize() {
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (den_ < 0) g = -g;
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (is_zero()) den_ = 1;
}

Rational CyclotomicElement::coefficient(long i) const {
  return make_rational(num_[static_cast<std::size_t>(i)], den_);
}

std::vector<Rational> CyclotomicElement::coordinates() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.push_back(make_rational(c, den_));
  return out;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CyclotomicElement::rational_value() const { return make_rational(num_[0], den_); }

CyclotomicElement CyclotomicElement::embed(long m) const {
  const long n = order();
  if (m == n) return *this;
  if (m % n != 0)
    throw BackendMismatch("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                          std::to_string(m) + ")");
  auto target = CyclotomicField::get(m);
  const long factor = m / n;
  std::vector<Integer> acc(static_cast<std::size_t>(target->degree()));
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const auto& p = target->power(static_cast<long>(k) * factor);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += num_[k] * p[j];
  }
  return CyclotomicElement(std::move(target), std::move(acc), den_);
}

CyclotomicElement CyclotomicElement::conj() const {
  std::vector<Integer> acc(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const auto& p = field_->power(-static_cast<long>(k));
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += num_[k] * p[j];
  }
  return CyclotomicElement(field_, std::move(acc), den_);
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const auto phi = num_.size();
  // Column j of the multiplication-by-numerator matrix is num * x^j.
  detail::RationalMatrix m(phi, std::vector<Rational>(phi));
  std::vector<Integer> col = num_;
  for (std::size_t j = 0; j < phi; ++j) {
    if (j > 0) {
      col.insert(col.begin(), Integer(0));
      field_->reduce(col);
    }
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col[i];
  }
  std::vector<Rational> rhs(phi);
  rhs[0] = 1;
  auto sol = detail::solve_square(std::move(m), std::move(rhs));
  if (!sol) throw DivisionByZero();
  for (auto& c : *sol) c *= den_;
  return CyclotomicElement(order(), *sol);
}

int CyclotomicElement::leading_sign() const {
  for (const auto& c : num_)
    if (c != 0) return sgn(c);
  return 0;
}

ComplexInterval CyclotomicElement::to_interval(long precision_bits) const {
  ComplexInterval acc(precision_bits);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    acc = acc + Interval(Rational(num_[k]), precision_bits) *
                    ComplexInterval::root_of_unity(static_cast<long>(k), order(), precision_bits);
  }
  if (den_ == 1) return acc;
  Interval d(Rational(den_), precision_bits);
  return {acc.re / d, acc.im / d};
}

std::string CyclotomicElement::canonical_key() const {
  std::string key = "C" + std::to_string(order()) + ":";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) key += ' ';
    key += num_[i].get_str(10);
  }
  key += '/';
  key += den_.get_str(10);
  return key;
}

std::string CyclotomicElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  const std::string symbol = "z" + std::to_string(order());
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    Rational c = make_rational(num_[k], den_);
    const bool negative = c < 0;
    Rational mag = abs(c);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << symbol;
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

namespace {

long lcm_order(long a, long b) { return std::lcm(a, b); }

}  // namespace

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() != b.order()) {
    const long m = lcm_order(a.order(), b.order());
    return a.embed(m) + b.embed(m);
  }
  std::vector<Integer> num(a.num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return CyclotomicElement(a.field_, std::move(num), a.den_ * b.den_);
}

CyclotomicElement operator-(const CyclotomicElement& a) {
  std::vector<Integer> num(a.num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = -a.num_[i];
  return CyclotomicElement(a.field_, std::move(num), a.den_);
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a + (-b);
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() != b.order()) {
    const long m = lcm_order(a.order(), b.order());
    return a.embed(m) * b.embed(m);
  }
  const std::size_t phi = a.num_.size();
  std::vector<Integer> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  a.field_->reduce(prod);
  return CyclotomicElement(a.field_, std::move(prod), a.den_ * b.den_);
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() != b.order()) {
    const long m = lcm_order(a.order(), b.order());
    return a.embed(m) == b.embed(m);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

}  // namespace origami
