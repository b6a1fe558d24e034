#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mcorr/digits.hpp"
#include "mcorr/enclosure.hpp"

using namespace mcorr;

namespace {

// Whether an MPFR value computed with round-to-nearest at higher precision
// lies inside the enclosure.
bool holds(const Enclosure& e, mpfr_srcptr v) {
  return mpfr_cmp(e.lo().get(), v) <= 0 && mpfr_cmp(v, e.hi().get()) <= 0;
}

struct Mp {
  explicit Mp(long bits) { mpfr_init2(v, bits); }
  ~Mp() { mpfr_clear(v); }
  mpfr_t v;
};

}  // namespace

TEST_SUITE("enclosure") {
  TEST_CASE("rational enclosures are tight and contain the value") {
    const Rational third(1, 3);
    const Enclosure e = Enclosure::of(third, 128);
    CHECK(e.contains(third));
    CHECK(e.width_double() < 1e-37);
    const Enclosure exact = Enclosure::of(Rational(3, 8), 64);
    CHECK(mpfr_equal_p(exact.lo().get(), exact.hi().get()));
  }

  TEST_CASE("pi against MPFR and a second arctangent formula") {
    for (long bits : {64L, 256L, 1024L}) {
      const Enclosure pi = enclose_pi(bits);
      Mp ref(bits + 64);
      mpfr_const_pi(ref.v, MPFR_RNDN);
      CHECK(holds(pi, ref.v));
      // π/4 = atan(1/2) + atan(1/3)
      Mp a(bits + 64), b(bits + 64);
      mpfr_set_ui(a.v, 1, MPFR_RNDN);
      mpfr_div_ui(a.v, a.v, 2, MPFR_RNDN);
      mpfr_atan(a.v, a.v, MPFR_RNDN);
      mpfr_set_ui(b.v, 1, MPFR_RNDN);
      mpfr_div_ui(b.v, b.v, 3, MPFR_RNDN);
      mpfr_atan(b.v, b.v, MPFR_RNDN);
      mpfr_add(a.v, a.v, b.v, MPFR_RNDN);
      mpfr_mul_ui(a.v, a.v, 4, MPFR_RNDN);
      CHECK(holds(pi, a.v));
      CHECK(pi.width_double() < std::ldexp(1.0, -static_cast<int>(bits) + 8));
    }
  }

  TEST_CASE("ln 2 against the series sum 1/(k 2^k)") {
    const Enclosure ln2 = enclose_ln2(200);
    // Partial sum S_K plus the tail bound 1/((K+1) 2^K).
    Rational s(0);
    const int K = 220;
    for (int k = 1; k <= K; ++k) s += Rational(mpz_class(1), mpz_class(k) * (mpz_class(1) << k));
    const Rational tail(mpz_class(1), mpz_class(K + 1) * (mpz_class(1) << K));
    CHECK(ln2.intersects(Enclosure::hull(Enclosure::of(s, 260), Enclosure::of(s + tail, 260))));
    Mp ref(300);
    mpfr_const_log2(ref.v, MPFR_RNDN);
    CHECK(holds(ln2, ref.v));
  }

  TEST_CASE("ln against mpfr_log") {
    for (const char* text : {"1/1000", "3/4", "1", "5501/7040", "123456789/7", "1000001"}) {
      const Rational x = Rational::parse(text);
      const Enclosure e = enclose_ln(x, 300);
      Mp ref(400);
      mpfr_set_q(ref.v, x.gmp().get_mpq_t(), MPFR_RNDN);
      mpfr_log(ref.v, ref.v, MPFR_RNDN);
      CHECK(holds(e, ref.v));
      CHECK(e.width_double() <= std::max(1e-85, std::fabs(mpfr_get_d(ref.v, MPFR_RNDN)) * 1e-85));
    }
    CHECK_THROWS_AS(enclose_ln(Rational(0), 64), std::domain_error);
    CHECK_THROWS_AS(enclose_ln(Rational(-2), 64), std::domain_error);
  }

  TEST_CASE("interval arithmetic") {
    const Enclosure a = Enclosure::of(Rational(1, 3), 64);
    const Enclosure b = Enclosure::of(Rational(-2, 7), 64);
    CHECK((a + b).contains(Rational(1, 21)));
    CHECK((a - b).contains(Rational(13, 21)));
    CHECK((a * b).contains(Rational(-2, 21)));
    CHECK((a / b).contains(Rational(-7, 6)));
    CHECK(a.pow(3).contains(Rational(1, 27)));
    CHECK_THROWS_AS(a / Enclosure::hull(b, a), std::domain_error);
    CHECK(Enclosure::hull(a, b).contains_zero());
  }

  TEST_CASE("decimal rendering") {
    CHECK(round_to_significant(enclose_pi(128), 10) == "3.141592654");
    CHECK(round_to_significant(Enclosure::of(Rational(-1, 8), 64), 2) == "-0.13");
    CHECK(round_to_significant(Enclosure::hull(Enclosure::of(Rational(1, 2), 64), Enclosure::of(Rational(1, 1), 64)), 3)
              .empty());
    CHECK(Enclosure::of(Rational(3, 4), 64).str() == "0.75");
    CHECK_THROWS_AS(round_to_significant(enclose_pi(64), 0), std::invalid_argument);
  }

  TEST_CASE("precision override from the environment") {
    setenv("MCORR_PRECISION_BITS", "512", 1);
    CHECK(default_precision_bits() == 512);
    setenv("MCORR_PRECISION_BITS", "bogus", 1);
    CHECK(default_precision_bits() == kDefaultPrecisionBits);
    unsetenv("MCORR_PRECISION_BITS");
    CHECK(default_precision_bits() == kDefaultPrecisionBits);
  }

  TEST_CASE("certified digits of c0 and gamma") {
    // c0 = (γ + 4 ln 2)/π with every constant from MPFR.
    Mp g(300), l(300), p(300);
    mpfr_const_euler(g.v, MPFR_RNDN);
    mpfr_const_log2(l.v, MPFR_RNDN);
    mpfr_mul_ui(l.v, l.v, 4, MPFR_RNDN);
    mpfr_add(g.v, g.v, l.v, MPFR_RNDN);
    mpfr_const_pi(p.v, MPFR_RNDN);
    mpfr_div(g.v, g.v, p.v, MPFR_RNDN);
    const CertifiedDigits c0 = certified_digits("c0", 30);
    CHECK(holds(c0.enclosure, g.v));
    CHECK(c0.digits.substr(0, 21) == "1.0662758532089143543");
    CHECK(certified_digits("gamma", 10).digits == "0.5772156649");
    CHECK(certified_digits("gamma", 1).digits == "0.6");
    CHECK_THROWS_AS(certified_digits("pi", 5), std::invalid_argument);
    CHECK_THROWS_AS(certified_digits("gamma", max_certifiable_digits() + 1), std::runtime_error);
  }
}
