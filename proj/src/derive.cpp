#include "mcorr/derive.hpp"

#include <functional>
#include <stdexcept>

namespace mcorr {

const std::vector<std::string>& derive_targets() {
  static const std::vector<std::string> t = {"gamma", "remark8", "landau", "example1", "example2"};
  return t;
}

Derivation derive(const std::string& target, int steps) {
  if (steps < 1 || steps > 6) throw std::invalid_argument("steps must lie in [1, 6]");
  CorrectionScheme s;
  std::function<PolynomialShape(int)> shape = [](int) { return PolynomialShape::general(); };
  if (target == "gamma") {
    s = harmonic_minus_log();
  } else if (target == "remark8") {
    s.family = Family::gamma;
    s.logs.push_back({Rational(1, 2), Polynomial({Rational(1, 3), 1, 1})});
    shape = [](int) { return PolynomialShape::centered(Rational(1, 2), true); };
  } else if (target == "landau") {
    s = landau_initial();
    shape = [](int k) { return k == 0 ? PolynomialShape::general() : PolynomialShape::centered(Rational(3, 4), true); };
  } else if (target == "example1") {
    s = harmonic_minus_log();
    s.rationals.push_back(RationalFunction(Polynomial({13, 30}), Polynomial({6, 36, 60})));
  } else if (target == "example2") {
    s = harmonic_minus_log();
    s.rationals.push_back(RationalFunction(Polynomial({-1, 6}), Polynomial({0, 0, 12})));
  } else {
    throw std::invalid_argument("unknown derive target '" + target + "'");
  }

  Derivation d{target, {}, s};
  for (int k = 0; k < steps; ++k) {
    CorrectionStep step = apply_correction_step(d.scheme, shape(k));
    d.steps.push_back({step.before, step.solution.phi, step.after_limit});
    d.scheme = std::move(step.scheme);
  }
  return d;
}

}  // namespace mcorr
