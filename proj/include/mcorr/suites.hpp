#pragma once

#include <string>
#include <vector>

#include "mcorr/report.hpp"

namespace mcorr {

/// A named group of inequalities with its default n range.
struct SuiteInfo {
  std::string name;
  long n_lo;
  long n_hi;
  std::string description;
};

/// theorem1, theorem4, classical-gamma, classical-landau, sandwich.
const std::vector<SuiteInfo>& verification_suites();
const SuiteInfo& suite_info(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& name, long n_lo, long n_hi, long precision_bits);

}  // namespace mcorr
