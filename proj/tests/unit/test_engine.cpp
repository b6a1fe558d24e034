#include <mpfr.h>

#include "doctest.h"
#include "mcorr/engine.hpp"
#include "mcorr/gamma.hpp"

using namespace mcorr;

namespace {

CorrectionScheme mu_initial() {
  CorrectionScheme s = harmonic_minus_log();
  s.rationals.push_back(RationalFunction(Polynomial({-1, 6}), Polynomial({0, 0, 12})));
  return s;
}

// n^rate (scheme(n) - γ) in plain MPFR with the library's own γ kept out.
double scaled_error(const CorrectionScheme& s, long n, int rate) {
  mpfr_t h, t, g;
  mpfr_inits2(400, h, t, g, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(h, 0, MPFR_RNDN);
  for (long m = n; m >= 1; --m) {
    mpfr_set_ui(t, 1, MPFR_RNDN);
    mpfr_div_si(t, t, m, MPFR_RNDN);
    mpfr_add(h, h, t, MPFR_RNDN);
  }
  for (const auto& l : s.logs) {
    const Rational v = l.argument(Rational(n));
    mpfr_set_q(t, v.gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, l.weight.gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_sub(h, h, t, MPFR_RNDN);
  }
  const Rational r = s.rational_part(Rational(n));
  mpfr_set_q(t, r.gmp().get_mpq_t(), MPFR_RNDN);
  mpfr_sub(h, h, t, MPFR_RNDN);
  mpfr_const_euler(g, MPFR_RNDN);
  mpfr_sub(h, h, g, MPFR_RNDN);
  mpfr_set_si(t, n, MPFR_RNDN);
  mpfr_pow_si(t, t, rate, MPFR_RNDN);
  mpfr_mul(h, h, t, MPFR_RNDN);
  const double out = mpfr_get_d(h, MPFR_RNDN);
  mpfr_clears(h, t, g, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("difference series of the mu scheme") {
    CorrectionScheme s = mu_initial();
    s = s.with_term({Rational(1, 120), Polynomial({Rational(-241, 882), 0, Rational(10, 21), 0, 1})});
    const DifferenceSeries d = build_difference_series(s, 12);
    CHECK(d.valuation == 11);
    CHECK(d.leading() == Rational::parse("-13775/305613"));
    const Limit l = limit_from_difference(d);
    CHECK(l.exponent == 10);
    CHECK(l.constant == Rational::parse("-2755/611226"));
  }

  TEST_CASE("lemma 1 guards") {
    DifferenceSeries d{TruncatedSeries(4), 5};
    CHECK(d.exhausted());
    CHECK_THROWS_AS(limit_from_difference(d), std::domain_error);
    DifferenceSeries low{TruncatedSeries({0, 1, 0}, 2), 1};
    CHECK_THROWS_AS(limit_from_difference(low), std::domain_error);
  }

  TEST_CASE("polynomial solver, general and even shapes") {
    const PolynomialSolution general = solve_polynomial_correction(mu_initial(), Rational(1, 120), 4);
    CHECK(general.phi == Polynomial({Rational(-241, 882), 0, Rational(10, 21), 0, 1}));
    const PolynomialSolution even =
        solve_polynomial_correction(mu_initial(), Rational(1, 120), 4, PolynomialShape::centered(Rational(0), true));
    CHECK(even.phi == general.phi);
    int skipped = 0;
    for (const auto& st : even.steps) skipped += st.skipped ? 1 : 0;
    CHECK(skipped == 2);
    CHECK_THROWS_AS(solve_polynomial_correction(mu_initial(), Rational(0), 4), std::invalid_argument);
    CHECK_THROWS_AS(solve_polynomial_correction(mu_initial(), Rational(1, 120), 0), std::invalid_argument);
  }

  TEST_CASE("first correction of H_n - ln n against direct evaluation") {
    const CorrectionStep st = apply_correction_step(harmonic_minus_log());
    CHECK(st.before.exponent == 1);
    CHECK(st.before.constant == Rational(1, 2));
    CHECK(st.solution.phi == Polynomial({Rational(1, 6), 1}));
    CHECK(st.after_limit.exponent == 3);
    // n^3 (ν_1(n) - γ) tends to the derived constant; the next term is O(1/n).
    const double c1 = st.after_limit.constant.to_double();
    CHECK(scaled_error(st.scheme, 4000, 3) == doctest::Approx(c1).epsilon(1e-3));
  }

  TEST_CASE("second correction against direct evaluation") {
    const CorrectionStep st1 = apply_correction_step(harmonic_minus_log());
    const CorrectionStep st2 = apply_correction_step(st1.scheme);
    CHECK(st2.after_limit.exponent == 7);
    CHECK(scaled_error(st2.scheme, 3000, 7) == doctest::Approx(st2.after_limit.constant.to_double()).epsilon(1e-3));
  }

  TEST_CASE("continued fraction corrections") {
    const ContinuedFractionSolution sol = solve_cf_correction(4);
    CHECK(sol.a == std::vector<Rational>{Rational(1, 2), Rational(1, 6), Rational(-1, 6), Rational(3, 5)});
    CHECK(sol.limit_constants[0] == Rational(-1, 12));
    // r_1 = H_n - ln n - 1/(2n): n^2 (r_1 - γ) -> -1/12.
    CHECK(scaled_error(lu_scheme({Rational(1, 2)}), 2000, 2) == doctest::Approx(-1.0 / 12).epsilon(1e-3));
    CHECK_THROWS_AS(solve_cf_correction(14), std::invalid_argument);
    CHECK_THROWS_AS(lu_fraction({}), std::invalid_argument);
  }

  TEST_CASE("Brouncker convergents") {
    CHECK_THROWS_AS(brouncker_convergent(0), std::invalid_argument);
    CHECK(convergent_index_for_order(15) >= 8);
    const TruncatedSeries q8 = brouncker_shift_series(8, 5);
    CHECK(q8[1] == Rational(1));
    CHECK(q8[2] == Rational(-5, 4));
    CHECK(q8[3] == Rational(49, 32));
  }

  TEST_CASE("empirical rate") {
    // x_n = 1/n: n^2 (x_n - x_{n+1}) = n/(n+1)
    std::vector<std::pair<long, Enclosure>> v;
    for (long n : {100L, 101L}) v.emplace_back(n, Enclosure::of(Rational(1, n), 256));
    const Enclosure r = empirical_rate(v, 2);
    CHECK(r.contains(Rational(100, 101)));
    CHECK_THROWS_AS(empirical_rate({{5, Enclosure::of(1, 64)}}, 2), std::invalid_argument);
  }

  TEST_CASE("invalid correction terms") {
    CHECK_THROWS_AS((CorrectionTerm{Rational(0), Polynomial({0, 1})}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CorrectionTerm{Rational(1), Polynomial({0, 2})}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(family_from_string("beta"), std::invalid_argument);
  }
}
