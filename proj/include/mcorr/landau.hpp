#pragma once

#include <string>
#include <vector>

#include "mcorr/enclosure.hpp"
#include "mcorr/engine.hpp"
#include "mcorr/report.hpp"
#include "mcorr/scheme.hpp"
#include "mcorr/series.hpp"

namespace mcorr {

/// G(n) = Σ_{k=0}^{n} 16^-k binom(2k,k)², exact.
Rational landau_G(long n);
/// ((2n)! / (4^n (n!)²))² = q(n)/π, exact.
Rational q_over_pi(long n);
/// Brouncker convergent q_k(n) as an exact rational function.
RationalFunction q_convergent(int k);
/// Series of q_8(n+1) in x = 1/n. Throws std::domain_error("exceeds q_8
/// fidelity window") for order > 15, where q_8 stops representing q.
TruncatedSeries q8_shift_series(int order);

/// The two-step correction of G(n); every constant is π-scaled, so the
/// approximation of level L is
///   ln(n+3/4)/π + c_0 [+ c0/(π Φ_1(n))] [+ c1/(π Φ_2(n))].
struct LandauScheme {
  int level = 2;
  Polynomial phi1;
  Polynomial phi2;
  Rational c0;  // 11/192
  Rational c1;  // the C_1 numerator
  Rational c2;  // lim n^14 π u_2(n)
  /// Engine form of the level-2 scheme.
  CorrectionScheme scheme;
};

/// Runs the derivation from scratch: C_0 from the initial difference,
/// Φ_1 (general degree 2), C_1, Φ_2 (degree 6, even in n + 3/4), C_2.
/// Cached after the first call.
const LandauScheme& derive_landau_scheme();
/// The same scheme assembled from the published constants.
const LandauScheme& published_landau_scheme();

/// Certified approximation of the given level (0, 1 or 2) at n >= 0.
Enclosure landau_approx(long n, int level, long precision_bits);
/// G(n) minus landau_approx.
Enclosure landau_error(long n, int level, long precision_bits);

/// Checks on G(n) for n in [n_lo, n_hi]:
///   u1-lower, u1-upper            C_1/(n+3/2)^6 < u_1(n) < C_1/(n+1/2)^6
///   brutman-lower (<=), brutman-upper
///   falaleev-lower, falaleev-upper (<=)
///   mortici-lower, mortici-upper  (n >= 1)
///   chen-upper
VerificationReport verify_landau_inequalities(long n_lo, long n_hi, long precision_bits,
                                              const std::vector<std::string>& only = {});

/// Convergent sandwich and telescoping checks:
///   q<k>-bound     q_k(n) below q(n) for even k, above for odd k (k = 1..9)
///   even-chain     q_2 < q_4 < q_6 < q_8 (exact)
///   odd-chain      q_9 < q_7 < q_5 < q_3 < q_1 (exact)
///   telescoping    G(n) - G(n-1) = q(n)/π (exact, n >= 1)
VerificationReport verify_sandwich(long n_lo, long n_hi, long precision_bits);

/// Coefficients a, b, c, ... of
///   G(n) = c_0 + ln(m + a/m + b/m³ + c/m⁵ + ...)/π + ...,  m = n + 3/4,
/// each fixed by raising the valuation of the difference series.
std::vector<Rational> log_argument_coefficients(int count);

}  // namespace mcorr
