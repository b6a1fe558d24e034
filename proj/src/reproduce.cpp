#include "mcorr/reproduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mcorr/engine.hpp"
#include "mcorr/gamma.hpp"
#include "mcorr/landau.hpp"
#include "mcorr/reference_values.hpp"

namespace mcorr {

std::string to_string(MatchStatus s) {
  switch (s) {
    case MatchStatus::match: return "MATCH";
    case MatchStatus::mismatch: return "MISMATCH";
    default: return "ERRATUM-FLAGGED";
  }
}

bool ReproduceReport::ok() const { return count(MatchStatus::mismatch) == 0; }

std::size_t ReproduceReport::count(MatchStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [s](const ReproduceItem& i) { return i.status == s; }));
}

namespace {

class Collector {
 public:
  explicit Collector(std::string target) : target_(std::move(target)) {}

  /// Compares against the reference table entry `key`.
  void check(const std::string& key, const Rational& actual) {
    const ReferenceValue& ref = reference_entry(key);
    const Rational expected = Rational::parse(ref.value);
    MatchStatus status = MatchStatus::match;
    if (expected != actual) status = ref.erratum ? MatchStatus::erratum_flagged : MatchStatus::mismatch;
    items_.push_back({target_, key, ref.value, actual.str(), status, ref.note});
  }

  /// Printed decimal digits compared as text.
  void check_text(const std::string& key, const std::string& actual, const std::string& digits) {
    const ReferenceValue& ref = reference_entry(key);
    MatchStatus status = MatchStatus::match;
    if (digits != ref.value) status = ref.erratum ? MatchStatus::erratum_flagged : MatchStatus::mismatch;
    items_.push_back({target_, key, ref.value, actual, status, ref.note});
  }

  /// A relation with no printed value of its own.
  void relation(const std::string& key, const std::string& expected, const std::string& actual, bool holds) {
    items_.push_back({target_, key, expected, actual, holds ? MatchStatus::match : MatchStatus::mismatch, ""});
  }

  std::vector<ReproduceItem> take() { return std::move(items_); }

 private:
  std::string target_;
  std::vector<ReproduceItem> items_;
};

const Polynomial kN({Rational(0), Rational(1)});

/// Descending coefficients of n^(deg-1) .. n^0.
void check_descending(Collector& c, const std::string& prefix, const Polynomial& phi,
                      const std::vector<std::string>& suffixes) {
  const int deg = phi.degree();
  for (std::size_t i = 0; i < suffixes.size(); ++i)
    c.check(prefix + suffixes[i], phi.coeff(deg - 1 - static_cast<int>(i)));
}

void check_growth(Collector& c, const std::string& key, const std::vector<int>& rates) {
  std::string actual;
  bool holds = true;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    actual += (i ? "," : "") + std::to_string(rates[i]);
    if (i > 0 && rates[i] < 2 * rates[i - 1] + 1) holds = false;
  }
  c.relation(key, "l_k >= 2 l_{k-1} + 1", actual, holds);
}

std::vector<ReproduceItem> example1() {
  Collector c("example1");
  CorrectionScheme s = harmonic_minus_log();
  s.rationals.push_back(RationalFunction(Polynomial({13, 30}), Polynomial({6, 36, 60})));
  const DifferenceSeries d0 = build_difference_series(s, 8);
  c.check("example1.initial.difference", d0.leading());
  c.check("example1.initial.limit", limit_from_difference(d0).constant);
  const Limit initial = limit_from_difference(d0);
  const DifferenceSeries mono =
      build_difference_series(s.with_term({initial.constant, Polynomial::monomial(initial.exponent)}), 10);
  c.check("example1.monomial.limit", limit_from_difference(mono).constant);
  const CorrectionStep step = apply_correction_step(s);
  check_descending(c, "example1.phi.", step.solution.phi, {"c4", "c3", "c2", "c1", "c0"});
  c.check("example1.difference", step.after.leading());
  c.check("example1.limit", step.after_limit.constant);
  return c.take();
}

std::vector<ReproduceItem> example2() {
  Collector c("example2");
  CorrectionScheme s = harmonic_minus_log();
  s.rationals.push_back(RationalFunction(Polynomial({-1, 6}), Polynomial({0, 0, 12})));
  const CorrectionStep step = apply_correction_step(s);
  c.check("example2.initial.limit", step.before.constant);
  check_descending(c, "example2.phi.", step.solution.phi, {"c3", "c2", "c1", "c0"});
  c.check("example2.difference", step.after.leading());
  c.check("example2.limit", step.after_limit.constant);
  return c.take();
}

std::vector<ReproduceItem> section4() {
  Collector c("section4");
  const CorrectionScheme s0 = harmonic_minus_log();
  c.check("section4.difference0", build_difference_series(s0, 4).leading());
  const CorrectionStep st1 = apply_correction_step(s0);
  c.check("section4.C0", st1.before.constant);
  c.check("section4.phi1.c0", st1.solution.phi.coeff(0));
  c.check("section4.difference1", st1.after.leading());
  c.check("section4.C1", st1.after_limit.constant);
  const CorrectionStep st2 = apply_correction_step(st1.scheme);
  check_descending(c, "section4.phi2.", st2.solution.phi, {"c2", "c1", "c0"});
  const Rational center = reference("section4.phi2.center");
  const auto shifted = st2.solution.phi.to_shifted_basis(center);
  c.check("section4.phi2.shifted2", shifted[2]);
  c.check("section4.phi2.shifted1", shifted[1]);
  c.check("section4.phi2.shifted0", shifted[0]);
  c.check("section4.difference2", st2.after.leading());
  c.check("section4.C2", st2.after_limit.constant);
  const CorrectionStep st3 = apply_correction_step(st2.scheme);
  check_descending(c, "section4.phi3.", st3.solution.phi, {"c6", "c5", "c4", "c3", "c2", "c1", "c0"});
  c.check("section4.C3", st3.after_limit.constant);
  const Rational fifteen_c3 = Rational(15) * st3.after_limit.constant;
  c.relation("section4.difference3", "15 C_3 = " + fifteen_c3.str(), st3.after.leading().str(),
             st3.after.leading() == fifteen_c3);
  check_growth(c, "section4.growth",
               {st1.before.exponent, st1.after_limit.exponent, st2.after_limit.exponent, st3.after_limit.exponent});
  // C_2 / C'_6 against its printed decimal prefix.
  const Rational ratio = st2.after_limit.constant / solve_cf_correction(6).limit_constants[5];
  mpz_class scaled;
  const Rational shifted_ratio = ratio * Rational(1000000);
  mpz_fdiv_q(scaled.get_mpz_t(), shifted_ratio.numerator().get_mpz_t(), shifted_ratio.denominator().get_mpz_t());
  const std::string prefix = "0." + scaled.get_str();
  c.check_text("section4.ratio.prefix", prefix + " (" + ratio.str() + ")", prefix);
  return c.take();
}

std::vector<ReproduceItem> lu() {
  Collector c("lu");
  const ContinuedFractionSolution sol = solve_cf_correction(13);
  for (std::size_t k = 0; k < sol.a.size(); ++k) c.check("lu.a" + std::to_string(k + 1), sol.a[k]);
  for (std::size_t k = 0; k < sol.limit_constants.size(); ++k)
    c.check("lu.C" + std::to_string(k + 1), sol.limit_constants[k]);
  bool alternating = true;
  for (std::size_t k = 1; k + 1 < sol.a.size(); k += 2) alternating = alternating && sol.a[k + 1] == -sol.a[k];
  c.relation("lu.a.odd", "a_{2k+1} = -a_{2k}", alternating ? "holds" : "violated", alternating);
  return c.take();
}

std::vector<ReproduceItem> landau() {
  Collector c("landau");
  const TruncatedSeries q8 = q8_shift_series(15);
  for (int k = 1; k <= 15; ++k) c.check("landau.q8.c" + std::to_string(k), q8[k]);
  const TruncatedSeries logdiff = series_log_poly(Polynomial({Rational(7, 4), Rational(1)}), 1, 15) -
                                  series_log_poly(Polynomial({Rational(3, 4), Rational(1)}), 1, 15);
  for (int k = 1; k <= 15; ++k) c.check("landau.logdiff.c" + std::to_string(k), logdiff[k]);
  const TruncatedSeries gap = series_from_rational_function(q_convergent(9) - q_convergent(8), 24);
  c.check("landau.q9q8.valuation", Rational(gap.valuation()));

  c.check("landau.difference0", build_difference_series(landau_initial(), 8).leading());
  const CorrectionStep st1 = apply_correction_step(landau_initial());
  c.check("landau.C0", st1.before.constant);
  c.check("landau.phi1.c1", st1.solution.phi.coeff(1));
  c.check("landau.phi1.c0", st1.solution.phi.coeff(0));
  c.check("landau.phi1.shifted0", st1.solution.phi.to_shifted_basis(Rational(3, 4))[0]);
  c.check("landau.difference1", st1.after.leading());
  c.check("landau.C1", st1.after_limit.constant);
  const CorrectionStep st2 = apply_correction_step(st1.scheme, PolynomialShape::centered(Rational(3, 4), true));
  const auto shifted = st2.solution.phi.to_shifted_basis(Rational(3, 4));
  c.check("landau.phi2.shifted4", shifted[4]);
  c.check("landau.phi2.shifted2", shifted[2]);
  c.check("landau.phi2.shifted0", shifted[0]);
  c.check("landau.C2", st2.after_limit.constant);
  const Rational fourteen_c2 = Rational(14) * st2.after_limit.constant;
  c.relation("landau.difference2", "14 C_2 = " + fourteen_c2.str(), st2.after.leading().str(),
             st2.after.leading() == fourteen_c2 && st2.after_limit.exponent == 14);
  check_growth(c, "landau.growth", {st1.before.exponent, st1.after_limit.exponent, st2.after_limit.exponent});

  const auto chen = log_argument_coefficients(3);
  c.check("landau.chen.a", chen[0]);
  c.check("landau.chen.b", chen[1]);
  c.check("landau.chen.c", chen[2]);
  return c.take();
}

std::vector<ReproduceItem> remark8() {
  Collector c("remark8");
  CorrectionScheme s;
  s.family = Family::gamma;
  s.logs.push_back({Rational(1, 2), Polynomial({Rational(1, 3), 1, 1})});
  const Rational half(1, 2);
  const CorrectionStep st1 = apply_correction_step(s, PolynomialShape::centered(half, true));
  c.check("remark8.C0", st1.before.constant);
  const auto b1 = st1.solution.phi.to_shifted_basis(half);
  c.check("remark8.phi1.shifted2", b1[2]);
  c.check("remark8.phi1.shifted0", b1[0]);
  c.check("remark8.C1", st1.after_limit.constant);
  const CorrectionStep st2 = apply_correction_step(st1.scheme, PolynomialShape::centered(half, true));
  const auto b2 = st2.solution.phi.to_shifted_basis(half);
  for (int k : {8, 6, 4, 2, 0}) c.check("remark8.phi2.shifted" + std::to_string(k), b2[k]);
  c.check("remark8.C2", st2.after_limit.constant);
  c.check("remark8.rate2", Rational(st2.after_limit.exponent));
  check_growth(c, "remark8.growth", {st1.before.exponent, st1.after_limit.exponent, st2.after_limit.exponent});

  // Same initial correction, corrected by powers of n² + n + 1/3.
  const PowerCorrections pc = derive_power_corrections(4);
  for (int k = 0; k < 4; ++k) c.check("mortici-chen.c" + std::to_string(k + 2), pc.coefficients[k]);
  c.check("mortici-chen.limit", pc.final.constant);
  c.relation("mortici-chen.rate", "12", std::to_string(pc.final.exponent), pc.final.exponent == 12);
  return c.take();
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> t = {"all", "example1", "example2", "section4", "lu", "landau", "remark8"};
  return t;
}

ReproduceReport reproduce(const std::string& target) {
  using Fn = std::vector<ReproduceItem> (*)();
  const std::vector<std::pair<std::string, Fn>> groups = {{"example1", example1}, {"example2", example2},
                                                          {"section4", section4}, {"lu", lu},
                                                          {"landau", landau},     {"remark8", remark8}};
  ReproduceReport report;
  bool known = false;
  for (const auto& [name, fn] : groups) {
    if (target != "all" && target != name) continue;
    known = true;
    auto items = fn();
    report.items.insert(report.items.end(), items.begin(), items.end());
  }
  if (!known) throw std::invalid_argument("unknown reproduce target '" + target + "'");
  return report;
}

std::string format_report(const ReproduceReport& report) {
  std::ostringstream os;
  for (const auto& i : report.items) {
    os << to_string(i.status) << " " << i.key << " expected=" << i.expected;
    if (i.status != MatchStatus::match || i.actual != i.expected) os << " actual=" << i.actual;
    if (!i.note.empty() && i.status != MatchStatus::match) os << "  # " << i.note;
    os << "\n";
  }
  os << report.items.size() << " items: " << report.count(MatchStatus::match) << " MATCH, "
     << report.count(MatchStatus::mismatch) << " MISMATCH, " << report.count(MatchStatus::erratum_flagged)
     << " ERRATUM-FLAGGED\n";
  return os.str();
}

}  // namespace mcorr
