#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcorr/enclosure.hpp"

namespace mcorr {

enum class CheckStatus { pass, inconclusive, fail };
std::string to_string(CheckStatus s);

/// One inequality at one n. `margin` is the midpoint of the certified slack
/// (positive when the inequality holds).
struct CheckResult {
  std::string inequality;
  long n = 0;
  CheckStatus status = CheckStatus::inconclusive;
  double margin = 0;
  long precision_bits = 0;
};

struct VerificationReport {
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const;
  /// fail if any check failed, else inconclusive if any is unresolved.
  CheckStatus overall() const;
  void append(const VerificationReport& other);
};

/// Status of `slack > 0` (strict) or `slack >= 0`.
CheckStatus classify(const Enclosure& slack, bool strict);

/// Evaluates slack(bits) at precision_bits and again at doubled precision
/// while the outcome is inconclusive, up to kMaxPrecisionBits.
CheckResult certify(const std::string& inequality, long n, bool strict, long precision_bits,
                    const std::function<Enclosure(long)>& slack);

/// Runs per_n for every n in [n_lo, n_hi] on all hardware threads and
/// returns the results ordered by n, then by the order per_n produced them.
VerificationReport run_range(long n_lo, long n_hi, const std::function<std::vector<CheckResult>(long)>& per_n);

/// {"inequality": ..., "n": ..., "status": ..., "margin": ..., "precision_bits": ...} per line.
std::string to_json_lines(const VerificationReport& report);
/// Short human summary: counts plus every non-PASS line.
std::string summary(const VerificationReport& report);

/// Error bracket of one approximant at one n.
struct TableRow {
  long n;
  std::string scheme;
  Enclosure error;
  /// Exact target value as a rational string when it is rational (G(n)).
  std::string exact = {};
  /// Decimal bounds as read by table_from_json; re-emitted verbatim so that
  /// directed rounding does not widen them on every round trip.
  std::string error_lo_text = {};
  std::string error_hi_text = {};
};

/// Columns n,scheme,error_lo,error_hi,exact (17 significant digits, outward).
std::string to_csv(const std::vector<TableRow>& rows);
/// {"schema": "mcorr.table/1", "rows": [{"n", "scheme", "error_lo", "error_hi", "exact"}]}
/// with "exact" null when absent.
std::string to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_json(const std::string& text, long precision_bits);

}  // namespace mcorr
