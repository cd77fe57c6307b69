#include "origami/param_rational.hpp"

#include <sstream>

#include "origami/errors.hpp"

namespace origami {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& c, long degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coefficient(long i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::reversed() const { return Polynomial(std::vector<Rational>(c_.rbegin(), c_.rend())); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

Polynomial Polynomial::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

ComplexInterval Polynomial::evaluate(const ComplexInterval& at) const {
  const long prec = at.precision();
  ComplexInterval acc(prec);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * at;
    acc.re = acc.re + Interval(*it, prec);
  }
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    const bool negative = c_[k] < 0;
    Rational mag = abs(c_[k]);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> r = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Rational c = r[static_cast<std::size_t>(i)] * inv_lead;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ParamRational::ParamRational() : den_(Rational(1)) {}

ParamRational::ParamRational(const Rational& value) : num_(value), den_(Rational(1)) {}

ParamRational::ParamRational(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

ParamRational ParamRational::power_of_t(long k) {
  if (k >= 0) return ParamRational(Polynomial::monomial(1, k), Polynomial(Rational(1)));
  return ParamRational(Polynomial(Rational(1)), Polynomial::monomial(1, -k));
}

void ParamRational::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
}

Rational ParamRational::rational_value() const { return num_.coefficient(0) / den_.coefficient(0); }

ParamRational ParamRational::conj() const {
  // num(1/t) / den(1/t) = rev(num) t^{deg den} / (rev(den) t^{deg num}).
  const long dn = num_.degree();
  const long dd = den_.degree();
  if (num_.is_zero()) return *this;
  Polynomial n = num_.reversed();
  Polynomial d = den_.reversed();
  if (dd >= dn)
    n = n.shifted(dd - dn);
  else
    d = d.shifted(dn - dd);
  return ParamRational(std::move(n), std::move(d));
}

ParamRational ParamRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return ParamRational(den_, num_);
}

int ParamRational::leading_sign() const {
  for (const auto& c : num_.coefficients())
    if (c != 0) return sgn(c);
  return 0;
}

ComplexInterval ParamRational::to_interval(const ComplexInterval& t) const {
  return num_.evaluate(t) / den_.evaluate(t);
}

std::string ParamRational::canonical_key() const {
  std::string key = "P:";
  auto append = [&key](const Polynomial& p) {
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
      if (i) key += ' ';
      key += p.coefficients()[i].get_str();
    }
  };
  append(num_);
  key += '|';
  append(den_);
  return key;
}

std::string ParamRational::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ParamRational operator+(const ParamRational& a, const ParamRational& b) {
  if (a.den_ == b.den_) return ParamRational(a.num_ + b.num_, a.den_);
  return ParamRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRational operator-(const ParamRational& a) {
  ParamRational r = a;
  r.num_ = -r.num_;
  return r;
}

ParamRational operator-(const ParamRational& a, const ParamRational& b) { return a + (-b); }

ParamRational operator*(const ParamRational& a, const ParamRational& b) {
  return ParamRational(a.num_ * b.num_, a.den_ * b.den_);
}

}  // namespace origami
