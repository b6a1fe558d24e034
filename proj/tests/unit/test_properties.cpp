#include <random>

#include "doctest.h"
#include "mcorr/landau.hpp"
#include "mcorr/series.hpp"

using namespace mcorr;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 engine(20140531);
  return engine;
}

Rational random_rational() {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  return Rational(num(rng()), den(rng()));
}

TruncatedSeries random_series(int order, bool unit_constant = false) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = random_rational();
  if (unit_constant) c[0] = Rational(1);
  return TruncatedSeries(std::move(c), order);
}

constexpr int kTrials = 40;

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("series ring laws") {
    for (int t = 0; t < kTrials; ++t) {
      const auto a = random_series(6), b = random_series(6), c = random_series(6);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == TruncatedSeries(6));
      if (!b[0].is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("shifting twice equals shifting by two") {
    for (int t = 0; t < kTrials; ++t) {
      const auto f = random_series(7);
      CHECK(series_compose_shift(series_compose_shift(f)) == series_compose_shift(f, 2));
      // Direct composition with x/(1+2x).
      const auto inner = series_from_rational_function(RationalFunction(Polynomial({1}), Polynomial({2, 1})), 7);
      CHECK(series_compose_shift(f, 2) == compose(f, inner));
    }
  }

  TEST_CASE("exp inverts log") {
    for (int t = 0; t < kTrials; ++t) {
      const auto f = random_series(6, true);
      CHECK(series_exp(series_log(f)) == f);
    }
  }

  TEST_CASE("continued fraction collapse matches direct evaluation") {
    std::uniform_int_distribution<int> depth(1, 5), point(1, 30);
    for (int t = 0; t < kTrials; ++t) {
      std::vector<ContinuedFractionLevel> levels;
      const int k = depth(rng());
      for (int i = 0; i < k; ++i) {
        Rational a = random_rational();
        if (a.is_zero()) a = Rational(1);
        levels.push_back({Polynomial({a}), Polynomial({random_rational(), Rational(1)})});
      }
      const Rational n(point(rng()));
      // Bottom-up evaluation at a point.
      Rational value(0);
      bool pole = false;
      for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        const Rational den = it->partial_denominator(n) + value;
        if (den.is_zero()) {
          pole = true;
          break;
        }
        value = it->partial_numerator(n) / den;
      }
      if (pole) continue;
      const RationalFunction f = cf_collapse(levels);
      if (f.denominator()(n).is_zero()) continue;
      CHECK(f(n) == value);
    }
  }

  TEST_CASE("directed rounding contains exact results") {
    std::uniform_int_distribution<long> bits(24, 300);
    for (int t = 0; t < 4 * kTrials; ++t) {
      const Rational a = random_rational(), b = random_rational();
      const long p = bits(rng());
      const Enclosure ea = Enclosure::of(a, p), eb = Enclosure::of(b, p);
      CHECK(ea.contains(a));
      CHECK((ea + eb).contains(a + b));
      CHECK((ea - eb).contains(a - b));
      CHECK((ea * eb).contains(a * b));
      if (!eb.contains_zero()) CHECK((ea / eb).contains(a / b));
      CHECK((ea * b).contains(a * b));
    }
  }

  TEST_CASE("G telescoping for n <= 200") {
    for (long n = 1; n <= 200; ++n) CHECK(landau_G(n) - landau_G(n - 1) == q_over_pi(n));
  }

  TEST_CASE("convergent sandwich chain for n <= 100") {
    std::vector<RationalFunction> q;
    for (int k = 1; k <= 9; ++k) q.push_back(q_convergent(k));
    for (long n = 0; n <= 100; ++n) {
      const Rational rn(n);
      std::vector<Rational> v;
      for (const auto& f : q) v.push_back(f(rn));
      CHECK(v[1] < v[3]);
      CHECK(v[3] < v[5]);
      CHECK(v[5] < v[7]);
      CHECK(v[8] < v[6]);
      CHECK(v[6] < v[4]);
      CHECK(v[4] < v[2]);
      CHECK(v[2] < v[0]);
      // Even convergents below q(n), odd above, with π bracketed.
      const Enclosure exact = enclose_pi(128) * q_over_pi(n);
      CHECK((exact - v[7]).certainly_positive());
      CHECK((v[8] - exact).certainly_positive());
    }
  }
}
