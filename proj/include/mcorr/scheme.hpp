#pragma once

#include <string>
#include <vector>

#include "mcorr/polynomial.hpp"
#include "mcorr/rational.hpp"

namespace mcorr {

/// Which sequence the corrections are applied to.
///   gamma:  v(n) = H_n                 approximant H_n - [corrections] -> γ
///   landau: v(n) = π·(G(n) - c_0)      approximant π(G(n) - c_0) - [corrections] -> 0
/// Landau quantities are stored multiplied by π so every coefficient is rational.
enum class Family { gamma, landau };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// weight · ln(argument(n)); the argument must be monic.
struct LogTerm {
  Rational weight;
  Polynomial argument;
  friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

/// constant / phi(n) with phi monic.
struct CorrectionTerm {
  Rational constant;
  Polynomial phi;

  /// Throws std::invalid_argument unless phi is monic of degree >= 1 and
  /// the constant is nonzero.
  void validate() const;
  friend bool operator==(const CorrectionTerm&, const CorrectionTerm&) = default;
};

/// An initial correction (logarithmic plus rational part) followed by an
/// ordered list of correction terms, all subtracted from v(n).
struct CorrectionScheme {
  Family family = Family::gamma;
  std::vector<LogTerm> logs;
  std::vector<RationalFunction> rationals;
  std::vector<CorrectionTerm> terms;
  /// Brouncker convergent used in place of q(n+1) for the Landau family;
  /// 0 selects the index automatically from the requested order.
  int convergent_index = 0;

  CorrectionScheme with_term(CorrectionTerm term) const;
  /// Exact value of the rational part of the subtracted corrections at n.
  Rational rational_part(const Rational& n) const;
};

/// The γ-type scheme H_n - ln n with no further corrections.
CorrectionScheme harmonic_minus_log();
/// The Landau scheme whose only correction is ln(n + 3/4) (π-scaled).
CorrectionScheme landau_initial();

}  // namespace mcorr
