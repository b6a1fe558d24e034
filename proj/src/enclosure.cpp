#include "mcorr/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mcorr {

long default_precision_bits() {
  if (const char* env = std::getenv("MCORR_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 32 && v <= kMaxPrecisionBits) return v;
  }
  return kDefaultPrecisionBits;
}

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return Rational(q);
}

// ---------------------------------------------------------------------------

namespace {

long prec_of(const Enclosure& a, const Enclosure& b) { return std::max(a.precision(), b.precision()); }

BigFloat rounded(mpfr_srcptr v, long prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set(r.get(), v, rnd);
  return r;
}

}  // namespace

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get())) throw std::domain_error("NaN in enclosure");
  if (mpfr_cmp(lo_.get(), hi_.get()) > 0) throw std::logic_error("enclosure with lo > hi");
}

Enclosure Enclosure::of(const Rational& r, long precision_bits) {
  BigFloat lo(precision_bits), hi(precision_bits);
  mpfr_set_q(lo.get(), r.gmp().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), r.gmp().get_mpq_t(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Enclosure enclose_rational(const Rational& r, long precision_bits) { return Enclosure::of(r, precision_bits); }

BigFloat Enclosure::width() const {
  BigFloat w(precision() + 2);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

double Enclosure::mid_double() const {
  BigFloat m(precision() + 2);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

bool Enclosure::contains(const Rational& r) const {
  return mpfr_cmp_q(lo_.get(), r.gmp().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), r.gmp().get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  return mpfr_cmp(lo_.get(), inner.lo_.get()) <= 0 && mpfr_cmp(hi_.get(), inner.hi_.get()) >= 0;
}

bool Enclosure::intersects(const Enclosure& other) const {
  return mpfr_cmp(lo_.get(), other.hi_.get()) <= 0 && mpfr_cmp(other.lo_.get(), hi_.get()) <= 0;
}

bool Enclosure::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

Enclosure Enclosure::operator-() const {
  BigFloat lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  const long p = prec_of(a, b);
  BigFloat lo(p), hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  const long p = prec_of(a, b);
  BigFloat lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const long p = prec_of(a, b);
  BigFloat lo(p), hi(p), t(p);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_.get(), a.hi_.get()}) {
    for (mpfr_srcptr y : {b.lo_.get(), b.hi_.get()}) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return {std::move(lo), std::move(hi)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw std::domain_error("enclosure division by an interval containing zero");
  const long p = prec_of(a, b);
  BigFloat lo(p), hi(p), t(p);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_.get(), a.hi_.get()}) {
    for (mpfr_srcptr y : {b.lo_.get(), b.hi_.get()}) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return {std::move(lo), std::move(hi)};
}

Enclosure operator+(const Enclosure& a, const Rational& b) {
  const long p = a.precision();
  BigFloat lo(p), hi(p);
  mpfr_add_q(lo.get(), a.lo_.get(), b.gmp().get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(hi.get(), a.hi_.get(), b.gmp().get_mpq_t(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Enclosure operator-(const Enclosure& a, const Rational& b) { return a + (-b); }

Enclosure operator*(const Enclosure& a, const Rational& b) {
  const long p = a.precision();
  BigFloat lo(p), hi(p);
  const auto* q = b.gmp().get_mpq_t();
  if (b.sign() >= 0) {
    mpfr_mul_q(lo.get(), a.lo_.get(), q, MPFR_RNDD);
    mpfr_mul_q(hi.get(), a.hi_.get(), q, MPFR_RNDU);
  } else {
    mpfr_mul_q(lo.get(), a.hi_.get(), q, MPFR_RNDD);
    mpfr_mul_q(hi.get(), a.lo_.get(), q, MPFR_RNDU);
  }
  return {std::move(lo), std::move(hi)};
}

Enclosure Enclosure::pow(unsigned k) const {
  Enclosure result = Enclosure::of(1, precision());
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  const long p = prec_of(a, b);
  BigFloat lo(p), hi(p);
  mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

// ---------------------------------------------------------------------------
// Decimal rendering on exact rationals.

namespace {

mpz_class pow10(long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

/// 10^e as a rational, for any sign of e.
Rational pow10_rational(long e) {
  return e >= 0 ? Rational(pow10(e)) : Rational(mpz_class(1), pow10(-e));
}

/// Largest E with 10^E <= v, for v > 0.
long decimal_exponent(const Rational& v) {
  const double approx = std::log10(v.to_double() > 0 ? v.to_double() : 1e-300);
  long e = std::isfinite(approx) ? static_cast<long>(std::floor(approx)) : 0;
  if (!(v.to_double() > 0) || !std::isfinite(v.to_double())) {
    // Outside double range: walk from the digit counts.
    e = static_cast<long>(mpz_sizeinbase(v.numerator().get_mpz_t(), 10)) -
        static_cast<long>(mpz_sizeinbase(v.denominator().get_mpz_t(), 10));
  }
  while (pow10_rational(e) > v) --e;
  while (pow10_rational(e + 1) <= v) ++e;
  return e;
}

mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

/// Formats digits D (as a string, most significant first) scaled so the first
/// digit has decimal exponent E.
std::string format_digits(const std::string& digits, long exponent, bool negative) {
  std::string out = negative ? "-" : "";
  const long n = static_cast<long>(digits.size());
  if (exponent >= -7 && exponent < 21) {
    if (exponent < 0) {
      out += "0.";
      out += std::string(static_cast<std::size_t>(-exponent - 1), '0');
      out += digits;
    } else if (exponent + 1 >= n) {
      out += digits;
      out += std::string(static_cast<std::size_t>(exponent + 1 - n), '0');
    } else {
      out += digits.substr(0, static_cast<std::size_t>(exponent + 1));
      out += ".";
      out += digits.substr(static_cast<std::size_t>(exponent + 1));
    }
    return out;
  }
  out += digits.substr(0, 1);
  if (n > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(exponent);
  return out;
}

std::string round_positive(const Rational& v, int significant, long& exponent_out) {
  long e = decimal_exponent(v);
  mpz_class d = floor_of(v * pow10_rational(significant - 1 - e) + Rational(1, 2));
  if (d == pow10(significant)) {
    d = pow10(significant - 1);
    ++e;
  }
  exponent_out = e;
  return d.get_str();
}

}  // namespace

std::string round_to_significant(const Enclosure& e, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  const Rational lo = e.lo().to_rational();
  const Rational hi = e.hi().to_rational();
  if (lo.sign() != hi.sign()) return lo.is_zero() && hi.is_zero() ? "0" : "";
  if (lo.is_zero()) return "0";
  const bool negative = lo.sign() < 0;
  long elo = 0, ehi = 0;
  const std::string dlo = round_positive(abs(lo), significant, elo);
  const std::string dhi = round_positive(abs(hi), significant, ehi);
  if (dlo != dhi || elo != ehi) return "";
  return format_digits(dlo, elo, negative);
}

std::string Enclosure::str() const {
  const Rational lo = lo_.to_rational();
  const Rational hi = hi_.to_rational();
  if (lo == hi && lo.is_zero()) return "0";
  if (lo.sign() != hi.sign() || lo.is_zero() || hi.is_zero()) return "0~";
  const bool negative = lo.sign() < 0;
  const Rational a = negative ? -hi : lo;  // smaller magnitude
  const Rational b = negative ? -lo : hi;  // larger magnitude
  const long e = decimal_exponent(b);
  const long max_digits = static_cast<long>(static_cast<double>(precision()) * 0.30103) + 2;
  std::string certified;
  for (long d = 1; d <= max_digits; ++d) {
    const Rational scale = pow10_rational(d - 1 - e);
    const mpz_class ta = floor_of(a * scale);
    const mpz_class tb = floor_of(b * scale);
    if (ta != tb) {
      // One extra, uncertain digit taken from the midpoint.
      const mpz_class tm = floor_of((a + b) / Rational(2) * scale);
      std::string digits = tm.get_str();
      if (static_cast<long>(digits.size()) < d) digits = std::string(static_cast<std::size_t>(d) - digits.size(), '0') + digits;
      return format_digits(digits, e, negative) + "~";
    }
    certified = tb.get_str();
    if (a == b && Rational(tb) == b * scale) return format_digits(certified, e, negative);
  }
  return format_digits(certified, e, negative) + "~";
}

// ---------------------------------------------------------------------------
// Elementary constants and ln.

namespace {

std::mutex g_constant_mutex;
std::map<long, Enclosure> g_pi_cache;
std::map<long, Enclosure> g_ln2_cache;

/// Brackets Σ_{k>=0} (-1)^k / ((2k+1) q^{2k+1}) = atan(1/q) between two
/// consecutive exact partial sums.
std::pair<Rational, Rational> atan_inverse_bracket(long q, long bits) {
  Rational sum(0), prev(0);
  mpz_class power = q;  // q^{2k+1}
  const mpz_class q2 = mpz_class(q) * q;
  const mpz_class limit = mpz_class(1) << static_cast<mp_bitcnt_t>(bits + 8);
  for (long k = 0;; ++k) {
    const Rational term(mpz_class(1), power * (2 * k + 1));
    prev = sum;
    sum += (k % 2 == 0) ? term : -term;
    if (power * (2 * k + 1) > limit) break;
    power *= q2;
  }
  return prev < sum ? std::pair{prev, sum} : std::pair{sum, prev};
}

Enclosure from_bracket(const Rational& lo, const Rational& hi, long prec) {
  return Enclosure::hull(Enclosure::of(lo, prec), Enclosure::of(hi, prec));
}

/// atanh(t) for 0 <= t < 1 given as a point value; lower bound from the
/// partial sum, upper bound adds the geometric tail t^{2N+1}/((2N+1)(1-t²)).
Enclosure atanh_point(mpfr_srcptr t_lo, mpfr_srcptr t_hi, long wp) {
  BigFloat lo(wp), hi(wp);
  auto partial = [&](mpfr_srcptr t, mpfr_rnd_t rnd, BigFloat& sum, BigFloat& next_term) {
    BigFloat t2(wp), power(wp), term(wp);
    mpfr_mul(t2.get(), t, t, rnd);
    mpfr_set(power.get(), t, rnd);
    mpfr_set_zero(sum.get(), 1);
    if (mpfr_zero_p(t)) {
      mpfr_set_zero(next_term.get(), 1);
      return;
    }
    for (unsigned long k = 0;; ++k) {
      mpfr_div_ui(term.get(), power.get(), 2 * k + 1, rnd);
      if (mpfr_get_exp(term.get()) < -(wp + 4)) {
        mpfr_set(next_term.get(), term.get(), rnd);
        return;
      }
      mpfr_add(sum.get(), sum.get(), term.get(), rnd);
      mpfr_mul(power.get(), power.get(), t2.get(), rnd);
    }
  };
  BigFloat dummy(wp), tail(wp);
  partial(t_lo, MPFR_RNDD, lo, dummy);
  partial(t_hi, MPFR_RNDU, hi, tail);
  if (!mpfr_zero_p(tail.get())) {
    BigFloat one_minus(wp);
    mpfr_mul(one_minus.get(), t_hi, t_hi, MPFR_RNDU);
    mpfr_ui_sub(one_minus.get(), 1, one_minus.get(), MPFR_RNDD);
    mpfr_div(tail.get(), tail.get(), one_minus.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), tail.get(), MPFR_RNDU);
  }
  return {std::move(lo), std::move(hi)};
}

/// ln of a positive exact binary value.
Enclosure ln_point(mpfr_srcptr v, long prec) {
  if (mpfr_sgn(v) <= 0) throw std::domain_error("nonpositive input");
  const long wp = std::max<long>(prec, static_cast<long>(mpfr_get_prec(v))) + 32;
  // v = m · 2^e with m in [3/4, 3/2).
  BigFloat m(static_cast<long>(mpfr_get_prec(v)) + 2);
  long e = static_cast<long>(mpfr_get_exp(v)) - 1;
  mpfr_mul_2si(m.get(), v, -e, MPFR_RNDN);  // exact: m in [1, 2)
  if (mpfr_cmp_d(m.get(), 1.5) >= 0) {
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);  // exact
    ++e;
  }
  const bool below_one = mpfr_cmp_ui(m.get(), 1) < 0;
  // |t| = |m-1|/(m+1)
  BigFloat num_lo(wp), num_hi(wp), den_lo(wp), den_hi(wp), t_lo(wp), t_hi(wp);
  if (below_one) {
    mpfr_ui_sub(num_lo.get(), 1, m.get(), MPFR_RNDD);
    mpfr_ui_sub(num_hi.get(), 1, m.get(), MPFR_RNDU);
  } else {
    mpfr_sub_ui(num_lo.get(), m.get(), 1, MPFR_RNDD);
    mpfr_sub_ui(num_hi.get(), m.get(), 1, MPFR_RNDU);
  }
  mpfr_add_ui(den_lo.get(), m.get(), 1, MPFR_RNDD);
  mpfr_add_ui(den_hi.get(), m.get(), 1, MPFR_RNDU);
  mpfr_div(t_lo.get(), num_lo.get(), den_hi.get(), MPFR_RNDD);
  mpfr_div(t_hi.get(), num_hi.get(), den_lo.get(), MPFR_RNDU);
  Enclosure ln_m = atanh_point(t_lo.get(), t_hi.get(), wp) * Rational(below_one ? -2 : 2);
  Enclosure result = e == 0 ? ln_m : ln_m + enclose_ln2(wp) * Rational(e);
  return {rounded(result.lo().get(), prec, MPFR_RNDD), rounded(result.hi().get(), prec, MPFR_RNDU)};
}

}  // namespace

Enclosure enclose_ln2(long precision_bits) {
  {
    std::lock_guard lock(g_constant_mutex);
    if (auto it = g_ln2_cache.find(precision_bits); it != g_ln2_cache.end()) return it->second;
  }
  // 2·atanh(1/3): positive terms 1/((2k+1)3^{2k+1}); tail <= (9/8)·next term.
  Rational sum(0);
  mpz_class power = 3;
  const mpz_class limit = mpz_class(1) << static_cast<mp_bitcnt_t>(precision_bits + 8);
  Rational next;
  for (long k = 0;; ++k) {
    const Rational term(mpz_class(1), power * (2 * k + 1));
    if (power * (2 * k + 1) > limit) {
      next = term;
      break;
    }
    sum += term;
    power *= 9;
  }
  const Enclosure value =
      from_bracket(Rational(2) * sum, Rational(2) * (sum + next * Rational(9, 8)), precision_bits);
  std::lock_guard lock(g_constant_mutex);
  return g_ln2_cache.emplace(precision_bits, value).first->second;
}

Enclosure enclose_pi(long precision_bits) {
  {
    std::lock_guard lock(g_constant_mutex);
    if (auto it = g_pi_cache.find(precision_bits); it != g_pi_cache.end()) return it->second;
  }
  const auto [a_lo, a_hi] = atan_inverse_bracket(5, precision_bits + 4);
  const auto [b_lo, b_hi] = atan_inverse_bracket(239, precision_bits + 4);
  const Rational lo = Rational(16) * a_lo - Rational(4) * b_hi;
  const Rational hi = Rational(16) * a_hi - Rational(4) * b_lo;
  const Enclosure value = from_bracket(lo, hi, precision_bits);
  std::lock_guard lock(g_constant_mutex);
  return g_pi_cache.emplace(precision_bits, value).first->second;
}

Enclosure enclose_ln(const Enclosure& x, long precision_bits) {
  if (mpfr_sgn(x.lo().get()) <= 0) throw std::domain_error("nonpositive input");
  const Enclosure at_lo = ln_point(x.lo().get(), precision_bits);
  if (mpfr_equal_p(x.lo().get(), x.hi().get())) return at_lo;
  const Enclosure at_hi = ln_point(x.hi().get(), precision_bits);
  return {at_lo.lo(), at_hi.hi()};
}

Enclosure enclose_ln(const Rational& x, long precision_bits) {
  if (x.sign() <= 0) throw std::domain_error("nonpositive input");
  return enclose_ln(Enclosure::of(x, precision_bits + 8), precision_bits);
}

}  // namespace mcorr
