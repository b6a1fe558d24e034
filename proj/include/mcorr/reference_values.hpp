#pragma once

#include <string>
#include <vector>

#include "mcorr/rational.hpp"

namespace mcorr {

/// One published constant. `value` is the rational exactly as printed
/// ("p/q" or an integer); `erratum` marks entries whose printed form is
/// known to disagree with the exact derivation.
struct ReferenceValue {
  const char* target;  // reproduce group: example1, example2, section4, lu, landau, remark8, catalog
  const char* key;
  const char* value;
  bool erratum;
  const char* note;
};

const std::vector<ReferenceValue>& reference_values();
/// Looks up a key; throws std::out_of_range when absent.
const ReferenceValue& reference_entry(const std::string& key);
Rational reference(const std::string& key);

}  // namespace mcorr
