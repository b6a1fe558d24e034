#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcorr/derive.hpp"
#include "mcorr/digits.hpp"
#include "mcorr/gamma.hpp"
#include "mcorr/landau.hpp"
#include "mcorr/reproduce.hpp"
#include "mcorr/serialize.hpp"
#include "mcorr/suites.hpp"
#include "mcorr/table.hpp"

namespace {

using namespace mcorr;

constexpr int kExitMismatch = 1;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;

struct Options {
  long precision_bits = default_precision_bits();
  std::string format;
  std::string output;
  bool quiet = false;
  int order = 0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + opt.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

int run_reproduce(const Options& opt, const std::string& target) {
  const ReproduceReport report = reproduce(target);
  if (opt.format == "json") {
    emit(opt, reproduce_to_json(report));
  } else {
    std::string text = format_report(report);
    if (opt.quiet) {
      std::istringstream in(text);
      std::string line, kept;
      while (std::getline(in, line))
        if (line.rfind("MATCH ", 0) != 0) kept += line + "\n";
      text = kept;
    }
    emit(opt, text);
  }
  return report.ok() ? 0 : kExitMismatch;
}

int default_steps(const std::string& target) {
  if (target == "gamma") return 3;
  if (target == "remark8" || target == "landau") return 2;
  return 1;
}

int run_derive(const Options& opt, const std::string& target) {
  const Derivation d = derive(target, opt.order > 0 ? opt.order : default_steps(target));
  if (opt.format == "json") {
    emit(opt, derivation_to_json(d));
    return 0;
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const auto& st = d.steps[k];
    os << "step " << k + 1 << ": C = " << st.before.constant << " (rate n^-" << st.before.exponent << ")\n";
    os << "  phi(n) = " << st.phi.str() << "\n";
    if (k + 1 == d.steps.size())
      os << "  remaining: C = " << st.after.constant << " (rate n^-" << st.after.exponent << ")\n";
  }
  emit(opt, os.str());
  return 0;
}

bool is_landau(const std::string& scheme) {
  const auto& names = landau_scheme_names();
  return std::find(names.begin(), names.end(), scheme) != names.end();
}

int run_eval(const Options& opt, const std::string& scheme, const std::vector<long>& n_values) {
  const bool landau = is_landau(scheme);
  const auto rows = make_table(landau ? "landau" : "gamma", {scheme}, n_values, opt.precision_bits);
  auto value_at = [&](long n) {
    return landau ? landau_approx(n, scheme.back() - '0', opt.precision_bits)
                  : gamma_approx(gamma_scheme(scheme), n, opt.precision_bits);
  };
  if (opt.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      out.push_back({{"scheme", scheme}, {"n", r.n}, {"value", value_at(r.n).str()}, {"error", r.error.str()}});
    emit(opt, out.dump(2));
    return 0;
  }
  std::ostringstream os;
  for (const auto& r : rows)
    os << scheme << " n=" << r.n << " value=" << value_at(r.n).str() << " error=" << r.error.str() << "\n";
  emit(opt, os.str());
  return 0;
}

int run_table(const Options& opt, const std::string& family, const std::vector<std::string>& schemes,
              const std::vector<long>& n_values) {
  const auto rows = make_table(family, schemes, n_values, opt.precision_bits);
  emit(opt, opt.format == "json" ? to_json(rows) : to_csv(rows));
  return 0;
}

int run_verify(const Options& opt, const std::string& suite, long n_lo, long n_hi) {
  const VerificationReport report = run_suite(suite, n_lo, n_hi, opt.precision_bits);
  if (opt.format == "json") {
    emit(opt, to_json_lines(report));
  } else {
    std::string text = summary(report);
    if (opt.quiet) text = text.substr(text.rfind('\n', text.size() - 2) + 1);
    emit(opt, text);
  }
  switch (report.overall()) {
    case CheckStatus::pass: return 0;
    case CheckStatus::fail: return kExitFail;
    default: return kExitInconclusive;
  }
}

int run_digits(const Options& opt, const std::string& constant, int digits) {
  const CertifiedDigits d = certified_digits(constant, digits);
  std::string text;
  if (!opt.quiet)
    text = "# " + constant + ", " + std::to_string(digits) + " significant digits, rounded to nearest\n";
  emit(opt, text + d.digits + "\n");
  return 0;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : verification_suites()) out.push_back(s.name);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple-correction approximations of the Euler-Mascheroni and Landau constants"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--precision-bits", opt.precision_bits, "Working precision in bits (default 256 or MCORR_PRECISION_BITS)")
      ->check(CLI::Range(32L, kMaxPrecisionBits));
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", opt.output, "Write output to PATH instead of stdout");
  app.add_flag("--quiet", opt.quiet, "Print only what is essential");
  app.add_option("--order", opt.order, "Number of correction steps for derive")->check(CLI::Range(1, 6));

  std::string target = "all";
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Re-derive published constants and diff them");
  reproduce_cmd->add_option("target", target)->check(CLI::IsMember(reproduce_targets()));

  std::string derive_target;
  auto* derive_cmd = app.add_subcommand("derive", "Run correction steps and print Φ and C");
  derive_cmd->add_option("target", derive_target)->required()->check(CLI::IsMember(derive_targets()));

  std::string eval_scheme;
  std::vector<long> eval_n;
  auto* eval_cmd = app.add_subcommand("eval", "Certified value and error of one approximant");
  eval_cmd->add_option("scheme", eval_scheme, "gamma catalog name or level0..level2")->required();
  eval_cmd->add_option("n", eval_n)->required();

  std::string family;
  std::vector<std::string> schemes;
  std::vector<long> table_n;
  auto* table_cmd = app.add_subcommand("table", "Error brackets per scheme per n");
  table_cmd->add_option("family", family)->required()->check(CLI::IsMember({"gamma", "landau"}));
  table_cmd->add_option("--schemes", schemes)->required()->delimiter(',');
  table_cmd->add_option("--n", table_n)->required()->delimiter(',');

  std::string suite;
  long n_lo = -1, n_hi = -1;
  auto* verify_cmd = app.add_subcommand("verify", "Certify an inequality suite over a range of n");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n-lo", n_lo);
  verify_cmd->add_option("--n-hi", n_hi);

  std::string constant;
  int digits = 0;
  auto* digits_cmd = app.add_subcommand("digits", "Certified decimal digits of gamma or c0");
  digits_cmd->add_option("constant", constant)->required()->check(CLI::IsMember({"gamma", "c0"}));
  digits_cmd->add_option("digits", digits)->required()->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reproduce_cmd) return run_reproduce(opt, target);
    if (*derive_cmd) return run_derive(opt, derive_target);
    if (*eval_cmd) return run_eval(opt, eval_scheme, eval_n);
    if (*table_cmd) return run_table(opt, family, schemes, table_n);
    if (*verify_cmd) {
      const SuiteInfo& info = suite_info(suite);
      if (n_lo < 0) n_lo = info.n_lo;
      if (n_hi < 0) n_hi = info.n_hi;
      return run_verify(opt, suite, n_lo, n_hi);
    }
    if (*digits_cmd) return run_digits(opt, constant, digits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
