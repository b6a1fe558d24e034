#pragma once

#include <string>
#include <vector>

#include "mcorr/polynomial.hpp"
#include "mcorr/rational.hpp"

namespace mcorr {

/// Truncated power series Σ_{k=0}^{N} c_k x^k + O(x^{N+1}), where x = 1/n in
/// every use inside this library. The order N is carried explicitly and
/// operations never report coefficients beyond what their operands determine.
class TruncatedSeries {
 public:
  /// The zero series known through x^order.
  explicit TruncatedSeries(int order);
  TruncatedSeries(std::vector<Rational> coeffs, int order);

  /// x^k (exact) truncated at the given order.
  static TruncatedSeries monomial(int k, int order, const Rational& c = Rational(1));
  /// Σ p_k x^k truncated at order; the polynomial is read in x, not in n.
  static TruncatedSeries from_polynomial_in_x(const Polynomial& p, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k. Throws std::out_of_range when k > order.
  const Rational& operator[](int k) const;
  /// Index of the first nonzero coefficient, or order()+1 when all known
  /// coefficients vanish.
  int valuation() const;
  bool is_zero() const { return valuation() > order_; }

  /// Drops coefficients above new_order (new_order <= order()).
  TruncatedSeries truncated(int new_order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
  /// f/g. When g(0) = 0, a common factor x^v (v = valuation of g) is
  /// cancelled first; throws std::domain_error("zero divisor series") when g
  /// vanishes through its order and std::domain_error when f has smaller
  /// valuation than g.
  friend TruncatedSeries operator/(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f);
  friend TruncatedSeries operator+(const TruncatedSeries& f, const Rational& c);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// f(g(x)) for g(0) = 0. Result order is min(order f, order g + valuation g - 1)
/// capped at order f.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Series of h(n+1) in x = 1/n, given f(x) = h(1/x): composition with
/// x/(1+x). No order is lost.
TruncatedSeries series_compose_shift(const TruncatedSeries& f);
/// Shift by an integer step: composition with x/(1 + step*x).
TruncatedSeries series_compose_shift(const TruncatedSeries& f, long step);

/// Series in x = 1/n of rf(n) through the given order. Throws
/// std::domain_error("not proper at infinity") when deg P > deg Q.
TruncatedSeries series_from_rational_function(const RationalFunction& rf, int order);

/// ln f(x) for a series with f(0) = 1.
TruncatedSeries series_log(const TruncatedSeries& f);
/// exp f(x) for a series with f(0) = 0.
TruncatedSeries series_exp(const TruncatedSeries& f);

/// Series of ln(p(n)/n^m) in x = 1/n. p must be monic of degree m.
TruncatedSeries series_log_poly(const Polynomial& p, int m, int order);

/// Finite continued fraction a_1/(b_1 + a_2/(b_2 + ... + a_k/b_k)).
struct ContinuedFractionLevel {
  Polynomial partial_numerator;
  Polynomial partial_denominator;
};

/// Collapses a finite continued fraction bottom-up into an exact rational
/// function. Throws std::domain_error("degenerate continued fraction") when a
/// denominator collapses to the zero polynomial.
RationalFunction cf_collapse(const std::vector<ContinuedFractionLevel>& levels);

}  // namespace mcorr
