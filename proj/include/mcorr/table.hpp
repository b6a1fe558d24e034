#pragma once

#include <string>
#include <vector>

#include "mcorr/report.hpp"

namespace mcorr {

/// Landau approximants by correction level.
const std::vector<std::string>& landau_scheme_names();

/// Certified error rows, schemes outer and n inner.
///   gamma:  approx(n) - γ for catalog schemes (n >= 1)
///   landau: G(n) - approx(n) for level0, level1, level2, with G(n) in `exact`
/// Throws std::invalid_argument for an unknown family or scheme.
std::vector<TableRow> make_table(const std::string& family, const std::vector<std::string>& schemes,
                                 const std::vector<long>& n_values, long precision_bits);

}  // namespace mcorr
