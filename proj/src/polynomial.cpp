#include "mcorr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcorr {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_power(const Rational& c, int k) {
  Polynomial result = constant(1);
  const Polynomial linear({c, Rational(1)});
  for (int i = 0; i < k; ++i) result = result * linear;
  return result;
}

Polynomial Polynomial::from_shifted_basis(const Rational& center, std::span<const Rational> coeffs) {
  // Horner in the variable (n + center).
  const Polynomial linear({center, Rational(1)});
  Polynomial result;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) result = result * linear + constant(*it);
  return result;
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& n) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Polynomial Polynomial::taylor_shift(const Rational& shift) const {
  const Polynomial linear({shift, Rational(1)});
  Polynomial result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * linear + constant(*it);
  return result;
}

std::vector<Rational> Polynomial::to_shifted_basis(const Rational& center) const {
  // p(n) = q(n + center)  <=>  q(m) = p(m - center)
  auto shifted = taylor_shift(-center);
  auto out = shifted.coeffs_;
  out.resize(coeffs_.size());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  auto v = p.coeffs_;
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                        Polynomial& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  remainder = a;
  quotient = Polynomial();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)));
  while (!remainder.is_zero() && remainder.degree() >= db) {
    const int shift = remainder.degree() - db;
    const Rational factor = remainder.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = factor;
    remainder = remainder - Polynomial::monomial(shift, factor) * b;
  }
  quotient = Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

std::string Polynomial::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

Rational RationalFunction::operator()(const Rational& n) const {
  const Rational d = denominator_(n);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return numerator_(n) / d;
}

RationalFunction RationalFunction::reduced() const {
  if (numerator_.is_zero()) return RationalFunction(Polynomial(), Polynomial::constant(1));
  const Polynomial g = Polynomial::gcd(numerator_, denominator_);
  Polynomial num, den, rem;
  Polynomial::divmod(numerator_, g, num, rem);
  Polynomial::divmod(denominator_, g, den, rem);
  const Rational scale = Rational(1) / den.leading();
  return RationalFunction(scale * num, scale * den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator_ == b.denominator_) return {a.numerator_ + b.numerator_, a.denominator_};
  return {a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
          a.denominator_ * b.denominator_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + RationalFunction(-b.numerator_, b.denominator_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator_ * b.numerator_, a.denominator_ * b.denominator_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.numerator_.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.numerator_ * b.denominator_, a.denominator_ * b.numerator_};
}

}  // namespace mcorr
