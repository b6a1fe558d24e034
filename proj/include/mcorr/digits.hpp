#pragma once

#include <string>

#include "mcorr/enclosure.hpp"

namespace mcorr {

/// Decimal value of gamma or c0 rounded to nearest at `significant` digits.
/// The enclosure is narrowed until both ends round to the same string.
struct CertifiedDigits {
  std::string constant;
  int significant;
  std::string digits;
  Enclosure enclosure;
};

/// Largest digit count the gamma enclosure can support.
int max_certifiable_digits();

/// constant is "gamma" or "c0". Throws std::invalid_argument for anything
/// else and std::runtime_error ("only N digits are certifiable") past the
/// retry ceiling.
CertifiedDigits certified_digits(const std::string& constant, int significant);

}  // namespace mcorr
