#pragma once

#include <string>
#include <vector>

namespace mcorr {

enum class MatchStatus { match, mismatch, erratum_flagged };
std::string to_string(MatchStatus s);

/// One published constant compared with its re-derivation.
struct ReproduceItem {
  std::string target;
  std::string key;
  std::string expected;
  std::string actual;
  MatchStatus status;
  std::string note;
};

struct ReproduceReport {
  std::vector<ReproduceItem> items;
  /// True unless some item is a plain mismatch; flagged errata never fail.
  bool ok() const;
  std::size_t count(MatchStatus s) const;
};

/// all, example1, example2, section4, lu, landau, remark8.
const std::vector<std::string>& reproduce_targets();
/// Re-derives every constant of the target from scratch and diffs it
/// against the reference table. Throws std::invalid_argument for an
/// unknown target.
ReproduceReport reproduce(const std::string& target);

/// One line per item: STATUS key expected=... actual=... (actual only when
/// it differs).
std::string format_report(const ReproduceReport& report);

}  // namespace mcorr
