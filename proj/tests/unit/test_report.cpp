#include <atomic>

#include "doctest.h"
#include "json.hpp"
#include "mcorr/derive.hpp"
#include "mcorr/reference_values.hpp"
#include "mcorr/reproduce.hpp"
#include "mcorr/serialize.hpp"
#include "mcorr/table.hpp"

using namespace mcorr;

namespace {
Enclosure interval(double lo, double hi) {
  return Enclosure::hull(Enclosure::of(Rational(static_cast<long>(lo * 1000), 1000), 64),
                         Enclosure::of(Rational(static_cast<long>(hi * 1000), 1000), 64));
}
}  // namespace

TEST_SUITE("report") {
  TEST_CASE("classification of strict and non-strict slack") {
    CHECK(classify(interval(0.5, 1), true) == CheckStatus::pass);
    CHECK(classify(interval(-1, -0.5), true) == CheckStatus::fail);
    CHECK(classify(interval(0, 0), true) == CheckStatus::fail);
    CHECK(classify(interval(0, 0), false) == CheckStatus::pass);
    CHECK(classify(interval(-1, 1), true) == CheckStatus::inconclusive);
    CHECK(classify(interval(-1, 0), false) == CheckStatus::inconclusive);
  }

  TEST_CASE("certify raises precision until resolved") {
    int calls = 0;
    const CheckResult r = certify("probe", 7, true, 64, [&](long bits) {
      ++calls;
      return bits >= 256 ? interval(0.001, 0.002) : interval(-1, 1);
    });
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.precision_bits == 256);
    CHECK(calls == 3);
    const CheckResult stuck = certify("stuck", 1, true, 1024, [](long) { return interval(-1, 1); });
    CHECK(stuck.status == CheckStatus::inconclusive);
    CHECK(stuck.precision_bits == kMaxPrecisionBits);
  }

  TEST_CASE("run_range orders by n and propagates errors") {
    const VerificationReport r = run_range(3, 200, [](long n) {
      return std::vector<CheckResult>{{"a", n, CheckStatus::pass, 0, 0}, {"b", n, CheckStatus::pass, 0, 0}};
    });
    REQUIRE(r.results.size() == 2 * 198);
    for (std::size_t i = 0; i < r.results.size(); ++i) {
      CHECK(r.results[i].n == 3 + static_cast<long>(i / 2));
      CHECK(r.results[i].inequality == (i % 2 ? "b" : "a"));
    }
    CHECK_THROWS_AS(run_range(0, 50, [](long n) -> std::vector<CheckResult> {
                      if (n == 17) throw std::runtime_error("boom");
                      return {};
                    }),
                    std::runtime_error);
    CHECK_THROWS_AS(run_range(5, 4, [](long) { return std::vector<CheckResult>{}; }), std::invalid_argument);
  }

  TEST_CASE("overall status and json lines") {
    VerificationReport r;
    r.results.push_back({"x", 1, CheckStatus::pass, 0.5, 64});
    CHECK(r.overall() == CheckStatus::pass);
    r.results.push_back({"x", 2, CheckStatus::inconclusive, 0, 4096});
    CHECK(r.overall() == CheckStatus::inconclusive);
    r.results.push_back({"x", 3, CheckStatus::fail, -1, 64});
    CHECK(r.overall() == CheckStatus::fail);
    const std::string lines = to_json_lines(r);
    const auto first = nlohmann::json::parse(lines.substr(0, lines.find('\n')));
    CHECK(first["status"] == "PASS");
    CHECK(first["precision_bits"] == 64);
  }

  TEST_CASE("table csv and json round trip") {
    const auto rows = make_table("landau", {"level0", "level2"}, {0, 10}, 256);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].exact == "1");
    const std::string csv = to_csv(rows);
    CHECK(csv.substr(0, csv.find('\n')) == "n,scheme,error_lo,error_hi,exact");
    const auto back = table_from_json(to_json(rows), 256);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(back[i].n == rows[i].n);
      CHECK(back[i].scheme == rows[i].scheme);
      CHECK(back[i].exact == rows[i].exact);
      CHECK(back[i].error.contains(rows[i].error));
    }
    CHECK(to_json(back) == to_json(rows));
    CHECK_THROWS_AS(make_table("gamma", {"nope"}, {10}, 64), std::invalid_argument);
    CHECK_THROWS_AS(make_table("beta", {"nu0"}, {10}, 64), std::invalid_argument);
    CHECK_THROWS_AS(table_from_json(R"({"schema":"other","rows":[]})", 64), std::invalid_argument);
  }

  TEST_CASE("gamma table error ratio follows the claimed rates") {
    const auto rows = make_table("gamma", {"detemple", "nu3"}, {10, 100, 1000}, 256);
    REQUIRE(rows.size() == 6);
    for (int i = 0; i < 2; ++i) {
      const double d = rows[i + 1].error.mid_double() / rows[i].error.mid_double();
      const double v = rows[i + 4].error.mid_double() / rows[i + 3].error.mid_double();
      // (detemple ratio)/(nu3 ratio) ≈ 10^(15-2) within 10x.
      const double r = d / v;
      CHECK(r > 1e12);
      CHECK(r < 1e14);
    }
  }

  TEST_CASE("scheme and series serialization round trip") {
    const Derivation d = derive("landau", 2);
    const CorrectionScheme back = scheme_from_json(scheme_to_json(d.scheme));
    CHECK(back.family == Family::landau);
    CHECK(back.logs == d.scheme.logs);
    CHECK(back.terms == d.scheme.terms);
    CHECK(scheme_to_json(back) == scheme_to_json(d.scheme));
    const TruncatedSeries s({Rational(1, 3), 0, Rational(-7, 2)}, 2);
    CHECK(series_from_json(series_to_json(s)) == s);
    CHECK_THROWS_AS(series_from_json(R"({"coeffs":["1"],"order":3})"), std::invalid_argument);
    CHECK_THROWS_AS(scheme_from_json(R"({"schema":"x"})"), std::invalid_argument);
    const auto j = nlohmann::json::parse(derivation_to_json(d));
    CHECK(j["steps"][0]["C"] == "11/192");
  }

  TEST_CASE("derive targets") {
    const Derivation g = derive("gamma", 2);
    CHECK(g.steps[1].before.constant == Rational(-1, 72));
    CHECK(g.steps[1].after.exponent == 7);
    const Derivation e = derive("example2", 1);
    CHECK(e.steps[0].after.constant == Rational::parse("-13775/3056130"));
    CHECK_THROWS_AS(derive("nope", 1), std::invalid_argument);
    CHECK_THROWS_AS(derive("gamma", 0), std::invalid_argument);
  }

  TEST_CASE("reproduce statuses") {
    const ReproduceReport r = reproduce("all");
    CHECK(r.ok());
    CHECK(r.count(MatchStatus::mismatch) == 0);
    for (const auto& i : r.items) {
      if (i.status == MatchStatus::erratum_flagged) CHECK(reference_entry(i.key).erratum);
    }
    CHECK(reproduce("lu").items.size() == 27);
    CHECK_THROWS_AS(reproduce("nope"), std::invalid_argument);
    CHECK_THROWS_AS(reference_entry("missing.key"), std::out_of_range);
    const auto j = nlohmann::json::parse(reproduce_to_json(reproduce("example2")));
    CHECK(j["ok"] == true);
  }
}
