#include "mcorr/engine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mcorr {

TruncatedSeries difference_of(const RationalFunction& r, int order) {
  const RationalFunction shifted(r.numerator().taylor_shift(Rational(1)),
                                 r.denominator().taylor_shift(Rational(1)));
  return series_from_rational_function(r, order) - series_from_rational_function(shifted, order);
}

TruncatedSeries log_difference_of(const Polynomial& p, int order) {
  // ln p(n) - ln p(n+1) = ln(p(n)/n^m) - ln(p(n+1)/n^m); both arguments are monic of degree m.
  const int m = p.degree();
  return series_log_poly(p, m, order) - series_log_poly(p.taylor_shift(Rational(1)), m, order);
}

RationalFunction brouncker_convergent(int k) {
  if (k < 1) throw std::invalid_argument("convergent index must be >= 1");
  std::vector<ContinuedFractionLevel> levels;
  levels.push_back({Polynomial::constant(4), Polynomial({Rational(1), Rational(4)})});
  for (int i = 1; i < k; ++i) {
    const long odd = 2L * i - 1;
    levels.push_back({Polynomial::constant(Rational(odd * odd)), Polynomial({Rational(2), Rational(8)})});
  }
  return cf_collapse(levels);
}

TruncatedSeries brouncker_shift_series(int convergent_index, int order) {
  const RationalFunction q = brouncker_convergent(convergent_index);
  const RationalFunction shifted(q.numerator().taylor_shift(Rational(1)),
                                 q.denominator().taylor_shift(Rational(1)));
  return series_from_rational_function(shifted, order);
}

namespace {

/// Valuation of the series of q_{K+1}(n) - q_K(n).
int convergent_gap_valuation(int k) {
  static std::mutex mutex;
  static std::map<int, int> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  const int probe_order = 2 * k + 4;
  const auto gap = series_from_rational_function(brouncker_convergent(k + 1) - brouncker_convergent(k),
                                                 probe_order);
  const int v = gap.valuation();
  std::lock_guard lock(mutex);
  cache[k] = v;
  return v;
}

TruncatedSeries core_difference(const CorrectionScheme& scheme, int order) {
  if (scheme.family == Family::gamma) {
    // H_n - H_{n+1} = -1/(n+1) = -x/(1+x)
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) c[k] = Rational(k % 2 == 1 ? -1 : 1);
    return TruncatedSeries(std::move(c), order);
  }
  // π(G(n) - G(n+1)) = -q(n+1), with q(n+1) replaced by a convergent whose
  // deviation from q lies beyond x^order.
  int k = scheme.convergent_index;
  if (k == 0) {
    k = convergent_index_for_order(order);
  } else if (convergent_gap_valuation(k) < order + 1) {
    throw std::domain_error("order exceeds continued-fraction accuracy; increase K");
  }
  return -brouncker_shift_series(k, order);
}

}  // namespace

int convergent_index_for_order(int order) {
  int k = std::max(8, (order + 1) / 2);
  while (convergent_gap_valuation(k) < order + 1) ++k;
  return k;
}

DifferenceSeries build_difference_series(const CorrectionScheme& scheme, int order) {
  TruncatedSeries d = core_difference(scheme, order);
  for (const auto& log : scheme.logs) d = d - log.weight * log_difference_of(log.argument, order);
  for (const auto& r : scheme.rationals) d = d - difference_of(r, order);
  for (const auto& t : scheme.terms)
    d = d - t.constant * difference_of(RationalFunction(Polynomial::constant(1), t.phi), order);
  const int v = d.valuation();
  return {std::move(d), v};
}

Limit limit_from_difference(const DifferenceSeries& d) {
  if (d.exhausted()) throw std::domain_error("difference series exhausted; increase the order");
  if (d.valuation < 2) throw std::domain_error("Lemma 1 requires s > 1");
  return {d.leading() / Rational(d.valuation - 1), d.valuation - 1};
}

namespace {

TruncatedSeries term_difference(const Rational& constant, const Polynomial& phi, int order) {
  return constant * difference_of(RationalFunction(Polynomial::constant(1), phi), order);
}

}  // namespace

PolynomialSolution solve_polynomial_correction(const CorrectionScheme& scheme, const Rational& constant,
                                               int degree, const PolynomialShape& shape) {
  if (degree < 1) throw std::invalid_argument("correction degree must be >= 1");
  if (constant.is_zero()) throw std::invalid_argument("correction constant must be nonzero");
  const int full_order = 2 * degree + 1;
  const TruncatedSeries base = build_difference_series(scheme, full_order).series;

  std::vector<Rational> basis(static_cast<std::size_t>(degree) + 1);
  basis[degree] = Rational(1);
  PolynomialSolution out;

  for (int power = degree - 1; power >= 0; --power) {
    const int target = 2 * degree + 1 - power;
    const TruncatedSeries base_t = base.truncated(target);
    auto probe = [&](const Rational& value) {
      basis[power] = value;
      const Polynomial phi = Polynomial::from_shifted_basis(shape.center, basis);
      return (base_t - term_difference(constant, phi, target))[target];
    };
    const bool skip = shape.even_only && (degree - power) % 2 == 1;
    if (skip) {
      if (!probe(Rational(0)).is_zero())
        throw std::runtime_error("even-only shape inconsistent at x^" + std::to_string(target));
      out.steps.push_back({power, target, Rational(0), true});
      continue;
    }
    const Rational f0 = probe(Rational(0));
    const Rational f1 = probe(Rational(1));
    const Rational f2 = probe(Rational(2));
    const Rational slope = f1 - f0;
    if (f2 - f0 != Rational(2) * slope) throw std::runtime_error("nonlinearity detected");
    if (slope.is_zero()) throw std::runtime_error("coefficient not determinable at this order");
    basis[power] = -f0 / slope;
    out.steps.push_back({power, target, basis[power], false});
  }

  out.phi = Polynomial::from_shifted_basis(shape.center, basis);
  const TruncatedSeries check = base - term_difference(constant, out.phi, full_order);
  if (check.valuation() <= full_order)
    throw std::runtime_error("correction did not cancel through x^" + std::to_string(full_order) +
                             "; constant inconsistent with the scheme");
  return out;
}

CorrectionStep apply_correction_step(const CorrectionScheme& scheme, const PolynomialShape& shape,
                                     int lookahead) {
  auto find_leading = [](const CorrectionScheme& s, int order) {
    for (;; order *= 2) {
      if (order > 256) throw std::runtime_error("difference series vanishes through x^256");
      DifferenceSeries d = build_difference_series(s, order);
      if (!d.exhausted()) return d;
    }
  };
  const DifferenceSeries before = find_leading(scheme, 8);
  const Limit limit = limit_from_difference(before);
  PolynomialSolution solution = solve_polynomial_correction(scheme, limit.constant, limit.exponent, shape);
  CorrectionScheme next = scheme.with_term({limit.constant, solution.phi});
  DifferenceSeries after = find_leading(next, 2 * limit.exponent + 1 + lookahead);
  const Limit after_limit = limit_from_difference(after);
  return {limit, std::move(solution), std::move(next), std::move(after), after_limit};
}

RationalFunction lu_fraction(const std::vector<Rational>& a) {
  if (a.empty()) throw std::invalid_argument("Lu fraction needs at least a_1");
  const Polynomial n({Rational(0), Rational(1)});
  std::vector<ContinuedFractionLevel> levels;
  levels.push_back({Polynomial::constant(a[0]), n});
  for (std::size_t i = 1; i < a.size(); ++i) levels.push_back({a[i] * n, n});
  return cf_collapse(levels);
}

CorrectionScheme lu_scheme(const std::vector<Rational>& a) {
  CorrectionScheme s = harmonic_minus_log();
  if (!a.empty()) s.rationals.push_back(lu_fraction(a));
  return s;
}

ContinuedFractionSolution solve_cf_correction(int k_max) {
  if (k_max < 1 || k_max > 13) throw std::invalid_argument("k_max must lie in [1, 13]");
  ContinuedFractionSolution out;
  for (int k = 1; k <= k_max; ++k) {
    const int target = k + 1;
    auto probe = [&](const Rational& value) {
      auto a = out.a;
      a.push_back(value);
      return build_difference_series(lu_scheme(a), target).series[target];
    };
    const Rational f0 = probe(Rational(0));
    const Rational f1 = probe(Rational(1));
    const Rational f2 = probe(Rational(2));
    const Rational slope = f1 - f0;
    if (f2 - f0 != Rational(2) * slope) throw std::runtime_error("nonlinearity detected");
    if (slope.is_zero()) throw std::runtime_error("coefficient not determinable at this order");
    out.a.push_back(-f0 / slope);
    const DifferenceSeries d = build_difference_series(lu_scheme(out.a), k + 2);
    const Limit limit = limit_from_difference(d);
    if (limit.exponent != k + 1)
      throw std::runtime_error("r_" + std::to_string(k) + " has unexpected rate n^-" +
                               std::to_string(limit.exponent));
    out.limit_constants.push_back(limit.constant);
  }
  return out;
}

Enclosure empirical_rate(const std::vector<std::pair<long, Enclosure>>& values, int s) {
  const Enclosure* x_n = nullptr;
  const Enclosure* x_next = nullptr;
  long n_best = -1;
  for (const auto& [n, v] : values) {
    for (const auto& [m, w] : values) {
      if (m == n + 1 && n > n_best) {
        n_best = n;
        x_n = &v;
        x_next = &w;
      }
    }
  }
  if (x_n == nullptr) throw std::invalid_argument("empirical_rate needs values at two consecutive n");
  const Enclosure diff = *x_n - *x_next;
  if (mpfr_zero_p(diff.lo().get()) && mpfr_zero_p(diff.hi().get())) return Enclosure::of(0, diff.precision());
  if (diff.contains_zero()) throw std::runtime_error("insufficient precision");
  // Ten significant digits: width <= 1e-10 · |diff|.
  BigFloat scaled_width = diff.width();
  mpfr_mul_ui(scaled_width.get(), scaled_width.get(), 10000000000UL, MPFR_RNDU);
  const BigFloat& nearest = diff.certainly_positive() ? diff.lo() : diff.hi();
  if (mpfr_cmpabs(scaled_width.get(), nearest.get()) > 0) throw std::runtime_error("insufficient precision");
  return diff * pow(Rational(n_best), s);
}

}  // namespace mcorr
