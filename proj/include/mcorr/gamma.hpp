#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcorr/enclosure.hpp"
#include "mcorr/engine.hpp"
#include "mcorr/report.hpp"
#include "mcorr/scheme.hpp"

namespace mcorr {

/// H_n = Σ_{m=1}^{n} 1/m, exact. Throws std::invalid_argument for n < 1.
Rational harmonic(long n);
/// Certified H_n. Exact for moderate n, directed-rounding summation beyond.
Enclosure harmonic_enclosure(long n, long precision_bits);

/// A named γ approximant: H_n minus the scheme's corrections.
struct GammaScheme {
  std::string name;
  std::string description;
  CorrectionScheme scheme;
  /// l in approx - γ = O(n^-l).
  int claimed_rate = 0;
  /// lim n^l (approx - γ), when stated.
  std::optional<Rational> claimed_constant;
  /// Stored exactly as printed although the printed formula is known to be
  /// defective; rate checks skip these.
  bool verbatim = false;
};

const std::vector<std::string>& gamma_scheme_names();
/// Throws std::invalid_argument("unknown gamma scheme ...").
GammaScheme gamma_scheme(const std::string& name);

/// ν(n) = H_n - ln(p)/2 - Σ_{k=2}^{count+1} c_k/p^k with p = n² + n + 1/3.
/// Each c_k is the limit constant left by the previous stage; `final` is the
/// limit after the last one (rate 2count + 4).
struct PowerCorrections {
  std::vector<Rational> coefficients;
  Limit final;
};
PowerCorrections derive_power_corrections(int count);

/// Certified value of a γ-family scheme at n >= 1.
Enclosure gamma_approx(const CorrectionScheme& scheme, long n, long precision_bits);
Enclosure gamma_approx(const GammaScheme& scheme, long n, long precision_bits);

/// μ(n) = H_n - ln n - (6n-1)/(12n²) - (1/120)/(n⁴ + 10n²/21 - 241/882).
Enclosure mu_value(long n, long precision_bits);

/// γ enclosed by the two-sided bound
///   c/(n+3/4)^10 < γ - μ(n) < c/(n-1/4)^10,   c = 13775/3056130.
struct GammaEnclosure {
  Enclosure value;
  long n_used;
};
GammaEnclosure gamma_enclosure(long n, long precision_bits);

/// Smallest n at which gamma_enclosure is expected to be narrower than
/// max_width (the width is about 0.045·n^-11).
long gamma_enclosure_n_for_width(double max_width);

/// γ with width at most max_width (0 selects about 2^-(precision_bits-16)).
/// Cached per (n, precision). Throws std::runtime_error when the width is
/// out of reach.
Enclosure gamma_reference(long precision_bits, double max_width = 0);

/// γ to 50 significant digits; tests check it against gamma_reference.
extern const char* const kGammaDigits50;

/// Checks on γ approximants for n in [n_lo, n_hi]:
///   mu-lower, mu-upper       two-sided bound on γ - μ(n)
///   mu-increasing            μ(n) < μ(n+1)
///   r3-lower (n >= 1), r3-upper (n >= 2)
///                            1/(120(n+1)^4) < r_3(n) - γ < 1/(120(n-1)^4)
/// Inconclusive checks are retried at doubled precision up to
/// kMaxPrecisionBits.
VerificationReport verify_gamma_inequalities(long n_lo, long n_hi, long precision_bits,
                                             const std::vector<std::string>& only = {});

}  // namespace mcorr
