#include "mcorr/digits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcorr/gamma.hpp"

namespace mcorr {

namespace {

// Width of the γ enclosure at n = 2^24.
const double kFinestWidth = 0.051 * std::pow(2.0, -264.0);

std::string too_many(int significant) {
  return "cannot certify " + std::to_string(significant) + " digits; only " +
         std::to_string(max_certifiable_digits()) + " digits are certifiable";
}

}  // namespace

int max_certifiable_digits() { return static_cast<int>(std::floor(-std::log10(kFinestWidth))) - 2; }

CertifiedDigits certified_digits(const std::string& constant, int significant) {
  if (constant != "gamma" && constant != "c0") throw std::invalid_argument("unknown constant '" + constant + "'");
  if (significant < 1) throw std::invalid_argument("digits must be positive");
  if (significant > max_certifiable_digits()) throw std::runtime_error(too_many(significant));

  for (int attempt = 0; attempt < 4; ++attempt) {
    const double width = std::max(kFinestWidth, std::pow(10.0, -(significant + 3 + 3 * attempt)));
    const long bits = std::max(default_precision_bits(), static_cast<long>((significant + 12 + 3 * attempt) * 3.33) + 32);
    Enclosure e = constant == "gamma" ? gamma_reference(bits, width) : enclose_c0(bits, width);
    std::string digits = round_to_significant(e, significant);
    if (!digits.empty()) return {constant, significant, std::move(digits), std::move(e)};
    if (width == kFinestWidth) break;
  }
  throw std::runtime_error(too_many(significant));
}

}  // namespace mcorr
