#include "doctest.h"
#include "mcorr/series.hpp"

using namespace mcorr;

namespace {
TruncatedSeries S(std::vector<Rational> c) {
  const int order = static_cast<int>(c.size()) - 1;
  return TruncatedSeries(std::move(c), order);
}
}  // namespace

TEST_SUITE("series") {
  TEST_CASE("orders propagate") {
    const TruncatedSeries a = S({1, 2, 3});
    const TruncatedSeries b = S({0, 1});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);  // min(2 + 1, 1 + 0)
    CHECK_THROWS_AS(a[3], std::out_of_range);
    CHECK_THROWS_AS(a.truncated(4), std::invalid_argument);
  }

  TEST_CASE("division and its failures") {
    const TruncatedSeries one_minus_x = S({1, -1, 0, 0, 0});
    const TruncatedSeries inv = S({1, 0, 0, 0, 0}) / one_minus_x;
    for (int k = 0; k <= 4; ++k) CHECK(inv[k] == Rational(1));
    CHECK_THROWS_AS(S({1, 1}) / TruncatedSeries(3), std::domain_error);
    CHECK_THROWS_AS(S({1, 1, 0}) / S({0, 1, 0}), std::domain_error);
  }

  TEST_CASE("rational function expansion") {
    // (6n-1)/(12n²) = x/2 - x²/12
    const auto s = series_from_rational_function(RationalFunction(Polynomial({-1, 6}), Polynomial({0, 0, 12})), 3);
    CHECK(s.coeffs() == std::vector<Rational>{0, Rational(1, 2), Rational(-1, 12), 0});
    CHECK_THROWS_AS(series_from_rational_function(RationalFunction(Polynomial({0, 0, 1}), Polynomial({1, 1})), 3),
                    std::domain_error);
  }

  TEST_CASE("log difference display") {
    const auto d = series_log_poly(Polynomial({Rational(7, 4), 1}), 1, 5) -
                   series_log_poly(Polynomial({Rational(3, 4), 1}), 1, 5);
    CHECK(d.coeffs() ==
          std::vector<Rational>{0, 1, Rational(-5, 4), Rational(79, 48), Rational(-145, 64), Rational(4141, 1280)});
  }

  TEST_CASE("log of 1 + x") {
    const auto l = series_log(S({1, 1, 0, 0, 0, 0}));
    for (int k = 1; k <= 5; ++k) CHECK(l[k] == Rational(k % 2 ? 1 : -1, k));
    CHECK_THROWS_AS(series_log(S({2, 1})), std::domain_error);
  }

  TEST_CASE("shift composition") {
    // 1/n evaluated at n+1 is 1/(n+1) = x - x² + x³ - ...
    const auto s = series_compose_shift(TruncatedSeries::monomial(1, 5));
    for (int k = 1; k <= 5; ++k) CHECK(s[k] == Rational(k % 2 ? 1 : -1));
    CHECK_THROWS_AS(compose(S({1, 1}), S({1, 1})), std::domain_error);
  }

  TEST_CASE("continued fraction collapse") {
    // 1/(n + 1/(n + 1)) = (n+1)/(n²+n+1)
    const std::vector<ContinuedFractionLevel> levels = {{Polynomial({1}), Polynomial({0, 1})},
                                                        {Polynomial({1}), Polynomial({1, 1})}};
    const RationalFunction f = cf_collapse(levels);
    for (int n = 1; n <= 5; ++n) CHECK(f(Rational(n)) == Rational(n + 1, n * n + n + 1));
    const std::vector<ContinuedFractionLevel> bad = {{Polynomial({1}), Polynomial()}};
    CHECK_THROWS_AS(cf_collapse(bad), std::domain_error);
  }
}
