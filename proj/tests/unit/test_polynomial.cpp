#include "doctest.h"
#include "mcorr/polynomial.hpp"

using namespace mcorr;

TEST_SUITE("polynomial") {
  TEST_CASE("trimming, degree and evaluation") {
    const Polynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK(p(Rational(3)) == Rational(7));
    CHECK(p.coeff(5) == Rational(0));
    CHECK_THROWS_AS(Polynomial().leading(), std::domain_error);
  }

  TEST_CASE("products and sums") {
    const Polynomial a({1, 1});   // n + 1
    const Polynomial b({-1, 1});  // n - 1
    CHECK(a * b == Polynomial({-1, 0, 1}));
    CHECK(a - b == Polynomial({2}));
    CHECK((a + (-a)).is_zero());
    CHECK(Rational(1, 2) * a == Polynomial({Rational(1, 2), Rational(1, 2)}));
  }

  TEST_CASE("shifted basis round trip") {
    // Φ_1 = (n+3/4)² + 1541/7040 expands to n² + 3n/2 + 5501/7040.
    const std::vector<Rational> basis = {Rational(1541, 7040), Rational(0), Rational(1)};
    const Polynomial phi = Polynomial::from_shifted_basis(Rational(3, 4), basis);
    CHECK(phi == Polynomial({Rational(5501, 7040), Rational(3, 2), Rational(1)}));
    CHECK(phi.to_shifted_basis(Rational(3, 4)) == basis);
    CHECK(Polynomial::shifted_power(Rational(1, 2), 2) == Polynomial({Rational(1, 4), 1, 1}));
  }

  TEST_CASE("taylor shift agrees with evaluation") {
    const Polynomial p({Rational(-241, 882), 0, Rational(10, 21), 0, 1});
    const Polynomial q = p.taylor_shift(Rational(1));
    for (int n = -3; n <= 3; ++n) CHECK(q(Rational(n)) == p(Rational(n + 1)));
  }

  TEST_CASE("division and gcd") {
    const Polynomial a({-1, 0, 1}), b({1, 1});
    Polynomial q, r;
    Polynomial::divmod(a, b, q, r);
    CHECK(q == Polynomial({-1, 1}));
    CHECK(r.is_zero());
    CHECK(Polynomial::gcd(a, Polynomial({1, 2, 1})) == b);
    CHECK_THROWS_AS(Polynomial::divmod(a, Polynomial(), q, r), std::domain_error);
  }

  TEST_CASE("rational functions") {
    const RationalFunction f(Polynomial({-1, 0, 1}), Polynomial({2, 2}));
    CHECK(f(Rational(3)) == Rational(1));
    const RationalFunction g = f.reduced();
    CHECK(g.denominator() == Polynomial({1}));
    CHECK(g.numerator() == Polynomial({Rational(-1, 2), Rational(1, 2)}));
    CHECK_THROWS_AS(f(Rational(-1)), std::domain_error);
    CHECK_THROWS_AS(RationalFunction(Polynomial({1}), Polynomial()), std::domain_error);
    CHECK((f / f).reduced()(Rational(5)) == Rational(1));
  }

  TEST_CASE("printing") {
    CHECK(Polynomial({Rational(5501, 7040), Rational(3, 2), Rational(1)}).str() == "n^2 + 3/2*n + 5501/7040");
  }
}
