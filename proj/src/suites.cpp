#include "mcorr/suites.hpp"

#include <stdexcept>

#include "mcorr/gamma.hpp"
#include "mcorr/landau.hpp"

namespace mcorr {

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> s = {
      {"theorem1", 1, 200, "two-sided bound on gamma - mu(n) and monotonicity of mu"},
      {"theorem4", 0, 200, "C_1/(n+3/2)^6 < u_1(n) < C_1/(n+1/2)^6"},
      {"classical-gamma", 1, 200, "1/(120(n+1)^4) < r_3(n) - gamma < 1/(120(n-1)^4)"},
      {"classical-landau", 0, 200, "Brutman, Falaleev, Mortici and Chen bounds on G(n)"},
      {"sandwich", 0, 100, "Brouncker convergents around q(n) and the telescoping identity"},
  };
  return s;
}

const SuiteInfo& suite_info(const std::string& name) {
  for (const auto& s : verification_suites())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

VerificationReport run_suite(const std::string& name, long n_lo, long n_hi, long precision_bits) {
  suite_info(name);
  if (name == "theorem1")
    return verify_gamma_inequalities(n_lo, n_hi, precision_bits, {"mu-lower", "mu-upper", "mu-increasing"});
  if (name == "classical-gamma") return verify_gamma_inequalities(n_lo, n_hi, precision_bits, {"r3-lower", "r3-upper"});
  if (name == "theorem4") return verify_landau_inequalities(n_lo, n_hi, precision_bits, {"u1-lower", "u1-upper"});
  if (name == "classical-landau")
    return verify_landau_inequalities(n_lo, n_hi, precision_bits,
                                      {"brutman-lower", "brutman-upper", "falaleev-lower", "falaleev-upper",
                                       "mortici-lower", "mortici-upper", "chen-upper"});
  return verify_sandwich(n_lo, n_hi, precision_bits);
}

}  // namespace mcorr
