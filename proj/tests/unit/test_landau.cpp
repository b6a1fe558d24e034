#include <mpfr.h>

#include <cmath>

#include "doctest.h"
#include "mcorr/landau.hpp"
#include "mcorr/reference_values.hpp"

using namespace mcorr;

TEST_SUITE("landau") {
  TEST_CASE("G and q(n)/pi") {
    CHECK(landau_G(0) == Rational(1));
    CHECK(landau_G(1) == Rational(5, 4));
    CHECK(landau_G(2) == Rational(89, 64));
    CHECK(q_over_pi(1) == Rational(1, 4));
    CHECK(q_over_pi(2) == Rational(9, 64));
    CHECK_THROWS_AS(landau_G(-1), std::invalid_argument);
    CHECK_THROWS_AS(q_over_pi(-1), std::invalid_argument);
  }

  TEST_CASE("q8 series window") {
    const TruncatedSeries s = q8_shift_series(15);
    CHECK(s[15] == Rational::parse("2947620308941/549755813888"));
    CHECK_THROWS_AS(q8_shift_series(16), std::domain_error);
    const TruncatedSeries gap = series_from_rational_function(q_convergent(9) - q_convergent(8), 24);
    CHECK(gap.valuation() == 17);
  }

  TEST_CASE("derived scheme agrees with the published one") {
    const LandauScheme& d = derive_landau_scheme();
    const LandauScheme& p = published_landau_scheme();
    CHECK(d.c0 == Rational(11, 192));
    CHECK(d.phi1 == p.phi1);
    CHECK(d.phi2 == p.phi2);
    CHECK(d.c1 == p.c1);
    // The published C_2 carries the opposite sign.
    CHECK(d.c2 == -p.c2);
    CHECK(d.c2.sign() > 0);
  }

  TEST_CASE("C2 sign by direct evaluation") {
    // n^14 π (G(n) - level-2 approximation) with an independent c_0.
    const long n = 60;
    mpfr_t g, l, pi, c0, t;
    mpfr_inits2(600, g, l, pi, c0, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_euler(c0, MPFR_RNDN);
    mpfr_const_log2(l, MPFR_RNDN);
    mpfr_mul_ui(l, l, 4, MPFR_RNDN);
    mpfr_add(c0, c0, l, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_div(c0, c0, pi, MPFR_RNDN);
    const LandauScheme& s = derive_landau_scheme();
    const Rational rn(n);
    mpfr_set_q(g, landau_G(n).gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_sub(g, g, c0, MPFR_RNDN);
    mpfr_mul(g, g, pi, MPFR_RNDN);
    mpfr_set_q(t, (rn + Rational(3, 4)).gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_sub(g, g, t, MPFR_RNDN);
    const Rational corr = s.c0 / s.phi1(rn) + s.c1 / s.phi2(rn);
    mpfr_set_q(t, corr.gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_sub(g, g, t, MPFR_RNDN);
    mpfr_set_ui(t, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_pow_ui(t, t, 14, MPFR_RNDN);
    mpfr_mul(g, g, t, MPFR_RNDN);
    CHECK(mpfr_get_d(g, MPFR_RNDN) == doctest::Approx(s.c2.to_double()).epsilon(0.05));
    mpfr_clears(g, l, pi, c0, t, static_cast<mpfr_ptr>(nullptr));
  }

  TEST_CASE("approximations and errors") {
    const Enclosure e = landau_error(0, 0, 128);
    CHECK(e.certainly_positive());
    CHECK_THROWS_AS(landau_approx(1, 3, 128), std::invalid_argument);
    CHECK_THROWS_AS(landau_approx(-1, 0, 128), std::invalid_argument);
    // Errors shrink level by level.
    const double e0 = std::fabs(landau_error(20, 0, 256).mid_double());
    const double e1 = std::fabs(landau_error(20, 1, 256).mid_double());
    const double e2 = std::fabs(landau_error(20, 2, 256).mid_double());
    CHECK(e1 < e0 * 1e-3);
    CHECK(e2 < e1 * 1e-6);
  }

  TEST_CASE("inequality suites on a short range") {
    CHECK(verify_landau_inequalities(0, 40, 256).overall() == CheckStatus::pass);
    CHECK(verify_sandwich(0, 20, 256).overall() == CheckStatus::pass);
    CHECK_THROWS_AS(verify_landau_inequalities(5, 4, 128), std::invalid_argument);
  }

  TEST_CASE("log argument coefficients") {
    const auto c = log_argument_coefficients(3);
    CHECK(c[0] == Rational(11, 192));
    CHECK(c[1] == Rational(-2009, 184320));
    CHECK(c[2] != Rational(2599153, 371589));
    CHECK_THROWS_AS(log_argument_coefficients(0), std::invalid_argument);
  }
}
