#pragma once

#include <mpfr.h>

#include <string>

#include "mcorr/rational.hpp"

namespace mcorr {

constexpr long kDefaultPrecisionBits = 256;
constexpr long kMaxPrecisionBits = 4096;

/// Default working precision: kDefaultPrecisionBits unless the environment
/// variable MCORR_PRECISION_BITS holds a valid override.
long default_precision_bits();

/// RAII owner of one MPFR number.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact conversion of the binary value (finite values only).
  Rational to_rational() const;

 private:
  mpfr_t value_;
};

/// A certified interval [lo, hi] that contains a real number. All arithmetic
/// rounds lo toward -inf and hi toward +inf.
class Enclosure {
 public:
  Enclosure(BigFloat lo, BigFloat hi);
  /// The degenerate enclosure [v, v] when v is representable, otherwise the
  /// tightest bracket at the precision.
  static Enclosure of(const Rational& r, long precision_bits);
  static Enclosure of(long value, long precision_bits) { return of(Rational(value), precision_bits); }

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  long precision() const { return lo_.precision(); }

  /// hi - lo rounded up.
  BigFloat width() const;
  double width_double() const { return width().to_double(); }
  double mid_double() const;

  bool contains(const Rational& r) const;
  bool contains(const Enclosure& inner) const;
  bool intersects(const Enclosure& other) const;
  bool contains_zero() const;
  /// Certainly positive / negative: the whole interval lies strictly on one side of 0.
  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_.get()) >= 0; }

  Enclosure operator-() const;
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws std::domain_error when the divisor contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator+(const Enclosure& a, const Rational& b);
  friend Enclosure operator-(const Enclosure& a, const Rational& b);
  friend Enclosure operator*(const Enclosure& a, const Rational& b);
  friend Enclosure operator*(const Rational& a, const Enclosure& b) { return b * a; }
  friend Enclosure operator+(const Rational& a, const Enclosure& b) { return b + a; }
  friend Enclosure operator-(const Rational& a, const Enclosure& b) { return (-b) + a; }

  /// Integer power (k >= 0).
  Enclosure pow(unsigned k) const;

  /// Convex hull of two enclosures.
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  /// Shortest decimal string whose digits are all certified, followed by
  /// one more digit and "~" when the interval does not pin the value.
  std::string str() const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Enclosure enclose_rational(const Rational& r, long precision_bits);

/// ln over an interval with positive lower end. Argument reduction to
/// [1, 2) via the binary exponent, then 2·atanh((m-1)/(m+1)) with an
/// explicit geometric tail bound. Throws std::domain_error("nonpositive input").
Enclosure enclose_ln(const Enclosure& x, long precision_bits);
Enclosure enclose_ln(const Rational& x, long precision_bits);

/// ln 2 = 2·atanh(1/3), bracketed by exact rational partial sums.
Enclosure enclose_ln2(long precision_bits);

/// π = 16·atan(1/5) - 4·atan(1/239), each arctangent bracketed by two
/// consecutive exact partial sums of its alternating series.
Enclosure enclose_pi(long precision_bits);

/// c_0 = (γ + 4 ln 2)/π, using the γ enclosure from the μ(n) bounds.
/// max_width = 0 uses the default γ reference (see gamma_reference).
Enclosure enclose_c0(long precision_bits, double max_width = 0);

/// Rounds every value of the enclosure to `significant` decimal digits
/// (round half up on the magnitude). Returns the common string, or an empty
/// string when lo and hi round differently.
std::string round_to_significant(const Enclosure& e, int significant);

}  // namespace mcorr
