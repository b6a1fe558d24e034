#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mcorr/rational.hpp"

namespace mcorr {

/// Dense univariate polynomial in n with rational coefficients.
/// coeffs()[k] multiplies n^k; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// n^k
  static Polynomial monomial(int k, const Rational& c = Rational(1));
  /// (n + c)^k
  static Polynomial shifted_power(const Rational& c, int k);
  /// Σ coeffs[k] (n + center)^k, expanded into powers of n.
  static Polynomial from_shifted_basis(const Rational& center, std::span<const Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of n^k; zero outside the stored range.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& n) const;

  /// Coefficients of this polynomial in powers of (n + center).
  std::vector<Rational> to_shifted_basis(const Rational& center) const;
  /// p(n + shift)
  Polynomial taylor_shift(const Rational& shift) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division over Q. Throws std::domain_error on a zero divisor.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                     Polynomial& remainder);
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Human-readable form such as "n^2 + 3/2*n + 5501/7040".
  std::string str(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// P(n)/Q(n) with Q not identically zero.
class RationalFunction {
 public:
  RationalFunction() : numerator_(), denominator_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);
  RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
      : RationalFunction(p, Polynomial::constant(1)) {}

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  /// Exact value at n; throws std::domain_error at a pole.
  Rational operator()(const Rational& n) const;

  /// Cancels the polynomial gcd and makes the denominator monic.
  RationalFunction reduced() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

}  // namespace mcorr
