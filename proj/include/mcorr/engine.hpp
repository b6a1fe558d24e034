#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mcorr/enclosure.hpp"
#include "mcorr/scheme.hpp"
#include "mcorr/series.hpp"

namespace mcorr {

/// Series in x = 1/n of [v(n) - v(n+1)] minus the differences of every
/// correction in a scheme.
struct DifferenceSeries {
  TruncatedSeries series;
  int valuation;

  /// True when every known coefficient vanishes.
  bool exhausted() const { return valuation > series.order(); }
  const Rational& leading() const { return series[valuation]; }
};

/// Series of R(n) - R(n+1) for a proper rational function R.
TruncatedSeries difference_of(const RationalFunction& r, int order);
/// Series of ln p(n) - ln p(n+1) for a monic polynomial p.
TruncatedSeries log_difference_of(const Polynomial& p, int order);
/// Brouncker convergent q_k(n) = 4/(1+4n+) 1²/(2+8n+) ... (2k-3)²/(2+8n).
RationalFunction brouncker_convergent(int k);
/// Series of q_K(n+1) in x = 1/n, K the Brouncker convergent index.
TruncatedSeries brouncker_shift_series(int convergent_index, int order);
/// Smallest convergent index whose swap error q - q_K lies beyond x^order;
/// never below 8. The choice is checked against the series of
/// q_{K+1} - q_K before it is returned.
int convergent_index_for_order(int order);

/// Throws std::domain_error("order exceeds continued-fraction accuracy;
/// increase K") when a fixed convergent index cannot support the order.
DifferenceSeries build_difference_series(const CorrectionScheme& scheme, int order);

/// Lemma-1 constants: if the difference has valuation s with leading
/// coefficient c, then lim n^l (x_n - limit) = C with l = s-1, C = c/(s-1).
struct Limit {
  Rational constant;
  int exponent;
  friend bool operator==(const Limit&, const Limit&) = default;
};
Limit limit_from_difference(const DifferenceSeries& d);

/// Basis in which the unknown coefficients of a correction polynomial are
/// expressed: powers of (n + center), optionally restricted to powers with
/// the same parity as the degree.
struct PolynomialShape {
  Rational center{0};
  bool even_only = false;

  static PolynomialShape general() { return {}; }
  static PolynomialShape centered(Rational c, bool even) { return {std::move(c), even}; }
};

/// Per-unknown trace of a solve, for reporting.
struct SolveStep {
  int basis_power;      // power of (n + center) being determined
  int target_index;     // coefficient of x^target_index that is cancelled
  Rational value;
  bool skipped;         // fixed at zero by the even-only shape
};

struct PolynomialSolution {
  Polynomial phi;
  std::vector<SolveStep> steps;
};

/// Finds the monic Φ of the given degree such that appending C/Φ to the
/// scheme cancels the next `degree` coefficients of its difference series.
/// Unknowns are determined one at a time, highest power first, by probing
/// the target coefficient at 0, 1 and 2.
///
/// Errors (std::runtime_error): "nonlinearity detected" when the three probes
/// are not collinear, "coefficient not determinable at this order" when the
/// target does not depend on the unknown, "even-only shape inconsistent" when
/// a skipped odd power would have to be nonzero.
PolynomialSolution solve_polynomial_correction(const CorrectionScheme& scheme, const Rational& constant,
                                               int degree, const PolynomialShape& shape = {});

/// One solver-driven correction step: derive C and l from the current
/// scheme, solve Φ of degree l, and report the resulting difference.
struct CorrectionStep {
  Limit before;
  PolynomialSolution solution;
  CorrectionScheme scheme;  // input scheme with the new term appended
  DifferenceSeries after;
  Limit after_limit;
};
CorrectionStep apply_correction_step(const CorrectionScheme& scheme, const PolynomialShape& shape = {},
                                     int lookahead = 3);

/// Lu's continued-fraction approximant R_k(n) built from a_1..a_k.
RationalFunction lu_fraction(const std::vector<Rational>& a);
/// H_n - ln n - R_k(n) as a scheme.
CorrectionScheme lu_scheme(const std::vector<Rational>& a);

struct ContinuedFractionSolution {
  std::vector<Rational> a;                // a_1..a_kmax
  std::vector<Rational> limit_constants;  // C'_1..C'_kmax, lim n^{k+1}(r_k - γ)
};
/// Determines a_1..a_kmax sequentially, each by cancelling the leading
/// difference coefficient of r_{k-1}. kmax must lie in [1, 13].
ContinuedFractionSolution solve_cf_correction(int k_max);

/// n^s (x_n - x_{n+1}) at the largest consecutive pair in `values`.
/// Throws std::runtime_error("insufficient precision") when fewer than ten
/// significant digits of the difference survive.
Enclosure empirical_rate(const std::vector<std::pair<long, Enclosure>>& values, int s);

}  // namespace mcorr
