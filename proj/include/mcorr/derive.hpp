#pragma once

#include <string>
#include <vector>

#include "mcorr/engine.hpp"
#include "mcorr/scheme.hpp"

namespace mcorr {

/// One correction C/Φ(n) and the limit it leaves behind.
struct DerivedStep {
  Limit before;  // lim n^l (x_n - limit) before the step
  Polynomial phi;
  Limit after;
};

struct Derivation {
  std::string target;
  std::vector<DerivedStep> steps;
  CorrectionScheme scheme;
};

/// gamma, remark8, landau, example1, example2.
const std::vector<std::string>& derive_targets();

/// Runs `steps` correction steps from the target's initial scheme:
///   gamma     H_n - ln n, general Φ
///   remark8   H_n - ln(n²+n+1/3)/2, Φ even in n + 1/2
///   landau    G(n) - ln(n+3/4)/π - c_0, general Φ_1 then even in n + 3/4
///   example1, example2   the θ and μ initial corrections
/// Throws std::invalid_argument for an unknown target or steps < 1.
Derivation derive(const std::string& target, int steps);

}  // namespace mcorr
