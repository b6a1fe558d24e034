#include "mcorr/landau.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mcorr/reference_values.hpp"

namespace mcorr {

Rational landau_G(long n) {
  if (n < 0) throw std::invalid_argument("G(n) needs n >= 0");
  // 16^n G(n) = Σ binom(2k,k)² 16^{n-k}, accumulated by Horner.
  mpz_class sum = 1, binom = 1;
  for (long k = 1; k <= n; ++k) {
    binom = binom * (2 * (2 * k - 1)) / k;
    sum = sum * 16 + binom * binom;
  }
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(4 * n);
  return Rational(sum, den);
}

Rational q_over_pi(long n) {
  if (n < 0) throw std::invalid_argument("q(n) needs n >= 0");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(4 * n);
  return Rational(binom * binom, den);
}

RationalFunction q_convergent(int k) { return brouncker_convergent(k); }

TruncatedSeries q8_shift_series(int order) {
  if (order > 15) throw std::domain_error("order exceeds q_8 fidelity window");
  if (order < 0) throw std::invalid_argument("negative order");
  return brouncker_shift_series(8, order);
}

namespace {

LandauScheme assemble(Polynomial phi1, Polynomial phi2, Rational c0, Rational c1, Rational c2) {
  LandauScheme s;
  s.phi1 = std::move(phi1);
  s.phi2 = std::move(phi2);
  s.c0 = std::move(c0);
  s.c1 = std::move(c1);
  s.c2 = std::move(c2);
  s.scheme = landau_initial().with_term({s.c0, s.phi1}).with_term({s.c1, s.phi2});
  return s;
}

const Rational kCenter(3, 4);

}  // namespace

const LandauScheme& derive_landau_scheme() {
  static const LandauScheme s = [] {
    const CorrectionStep first = apply_correction_step(landau_initial());
    const CorrectionStep second = apply_correction_step(first.scheme, PolynomialShape::centered(kCenter, true));
    return assemble(first.solution.phi, second.solution.phi, first.before.constant, second.before.constant,
                    second.after_limit.constant);
  }();
  return s;
}

const LandauScheme& published_landau_scheme() {
  static const LandauScheme s = [] {
    const Polynomial phi1 = Polynomial({reference("landau.phi1.c0"), reference("landau.phi1.c1"), Rational(1)});
    std::vector<Rational> basis(7);
    basis[6] = Rational(1);
    basis[4] = reference("landau.phi2.shifted4");
    basis[2] = reference("landau.phi2.shifted2");
    basis[0] = reference("landau.phi2.shifted0");
    return assemble(phi1, Polynomial::from_shifted_basis(kCenter, basis), reference("landau.C0"),
                    reference("landau.C1"), reference("landau.C2"));
  }();
  return s;
}

Enclosure landau_approx(long n, int level, long precision_bits) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (level < 0 || level > 2) throw std::invalid_argument("level must be 0, 1 or 2");
  const LandauScheme& s = published_landau_scheme();
  const long wp = precision_bits + 32;
  const Rational rn(n);
  Enclosure pi_scaled = enclose_ln(rn + kCenter, wp);
  if (level >= 1) pi_scaled = pi_scaled + Enclosure::of(s.c0 / s.phi1(rn), wp);
  if (level >= 2) pi_scaled = pi_scaled + Enclosure::of(s.c1 / s.phi2(rn), wp);
  return pi_scaled / enclose_pi(wp) + enclose_c0(wp);
}

Enclosure landau_error(long n, int level, long precision_bits) {
  return Enclosure::of(landau_G(n), precision_bits + 32) - landau_approx(n, level, precision_bits);
}

VerificationReport verify_landau_inequalities(long n_lo, long n_hi, long precision_bits,
                                              const std::vector<std::string>& only) {
  if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("need 0 <= n_lo <= n_hi");
  auto wanted = [&](const char* name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };
  const LandauScheme& s = published_landau_scheme();
  const Rational falaleev = reference("falaleev.upper");
  const Rational eleven(11, 192);
  // Tightest margins are about C_1·n^-7/π.
  const double base_width = 1e-4 * s.c1.to_double() / 4 * std::pow(static_cast<double>(n_hi) + 2, -7.0);
  auto c0_at = [=](long bits) {
    const double level = std::log2(static_cast<double>(bits) / static_cast<double>(precision_bits));
    return enclose_c0(bits, base_width * std::pow(1e-3, std::max(0.0, level)));
  };

  return run_range(n_lo, n_hi, [&](long n) {
    std::vector<CheckResult> out;
    const Rational rn(n);
    const Rational g = landau_G(n);
    auto G = [&](long bits) { return Enclosure::of(g, bits); };
    auto ln_over_pi = [&](const Rational& x, long bits) { return enclose_ln(x, bits) / enclose_pi(bits); };
    // u_0 = G - ln(n+3/4)/π - c_0
    auto u0 = [&](long bits) { return G(bits) - ln_over_pi(rn + kCenter, bits) - c0_at(bits); };
    auto over_pi = [&](const Rational& r, long bits) { return Enclosure::of(r, bits) / enclose_pi(bits); };

    if (wanted("u1-lower"))
      out.push_back(certify("u1-lower", n, true, precision_bits, [&](long bits) {
        return u0(bits) - over_pi(s.c0 / s.phi1(rn), bits) - over_pi(s.c1 / pow(rn + Rational(3, 2), 6), bits);
      }));
    if (wanted("u1-upper"))
      out.push_back(certify("u1-upper", n, true, precision_bits, [&](long bits) {
        return over_pi(s.c1 / pow(rn + Rational(1, 2), 6), bits) - (u0(bits) - over_pi(s.c0 / s.phi1(rn), bits));
      }));
    if (wanted("brutman-lower"))
      out.push_back(certify("brutman-lower", n, false, precision_bits, [&](long bits) {
        return G(bits) - ln_over_pi(rn + 1, bits) - Rational(1);
      }));
    if (wanted("brutman-upper"))
      out.push_back(certify("brutman-upper", n, true, precision_bits, [&](long bits) {
        return ln_over_pi(rn + 1, bits) + c0_at(bits) - G(bits);
      }));
    if (wanted("falaleev-lower"))
      out.push_back(certify("falaleev-lower", n, true, precision_bits, u0));
    if (wanted("falaleev-upper"))
      out.push_back(certify("falaleev-upper", n, false, precision_bits, [&](long bits) {
        return ln_over_pi(rn + kCenter, bits) + falaleev - G(bits);
      }));
    if (n >= 1 && wanted("mortici-lower")) out.push_back(certify("mortici-lower", n, true, precision_bits, u0));
    if (n >= 1 && wanted("mortici-upper"))
      out.push_back(certify("mortici-upper", n, true, precision_bits, [&](long bits) {
        return ln_over_pi(rn + kCenter + eleven / rn, bits) + c0_at(bits) - G(bits);
      }));
    if (wanted("chen-upper"))
      out.push_back(certify("chen-upper", n, true, precision_bits, [&](long bits) {
        const Rational m = rn + kCenter;
        return ln_over_pi(m + eleven / m, bits) + c0_at(bits) - G(bits);
      }));
    return out;
  });
}

VerificationReport verify_sandwich(long n_lo, long n_hi, long precision_bits) {
  if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("need 0 <= n_lo <= n_hi");
  std::vector<RationalFunction> q;
  for (int k = 1; k <= 9; ++k) q.push_back(q_convergent(k));

  return run_range(n_lo, n_hi, [&](long n) {
    std::vector<CheckResult> out;
    const Rational rn(n);
    std::vector<Rational> v;
    for (const auto& f : q) v.push_back(f(rn));
    const Rational ratio = q_over_pi(n);
    for (int k = 1; k <= 9; ++k) {
      const bool below = k % 2 == 0;
      out.push_back(certify("q" + std::to_string(k) + "-bound", n, true, precision_bits, [&](long bits) {
        const Enclosure exact = enclose_pi(bits) * ratio;
        const Enclosure qk = Enclosure::of(v[k - 1], bits);
        return below ? exact - qk : qk - exact;
      }));
    }
    auto exact_check = [&](const char* name, bool ok) {
      out.push_back({name, n, ok ? CheckStatus::pass : CheckStatus::fail, 0, 0});
    };
    exact_check("even-chain", v[1] < v[3] && v[3] < v[5] && v[5] < v[7]);
    exact_check("odd-chain", v[8] < v[6] && v[6] < v[4] && v[4] < v[2] && v[2] < v[0]);
    if (n >= 1) exact_check("telescoping", landau_G(n) - landau_G(n - 1) == ratio);
    return out;
  });
}

std::vector<Rational> log_argument_coefficients(int count) {
  if (count < 1 || count > 6) throw std::invalid_argument("count must lie in [1, 6]");
  // P(n) = m^{2count} + a m^{2count-2} + b m^{2count-4} + ..., and
  // ln(m + a/m + ...) = ln P(n) - (2count-1) ln m.
  const int degree = 2 * count;
  std::vector<Rational> found;
  auto scheme_for = [&](const std::vector<Rational>& coeffs) {
    std::vector<Rational> basis(static_cast<std::size_t>(degree) + 1);
    basis[degree] = Rational(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) basis[degree - 2 * (i + 1)] = coeffs[i];
    CorrectionScheme s;
    s.family = Family::landau;
    s.logs.push_back({Rational(1), Polynomial::from_shifted_basis(kCenter, basis)});
    s.logs.push_back({Rational(1 - degree), Polynomial({kCenter, Rational(1)})});
    return s;
  };
  const int order = 2 * degree + 4;
  for (int i = 0; i < count; ++i) {
    auto with = [&](const Rational& value) {
      auto c = found;
      c.push_back(value);
      return build_difference_series(scheme_for(c), order);
    };
    const DifferenceSeries base = with(Rational(0));
    if (base.exhausted()) throw std::runtime_error("difference vanishes through the working order");
    const int target = base.valuation;
    const Rational f0 = base.series[target];
    const Rational f1 = with(Rational(1)).series[target];
    const Rational f2 = with(Rational(2)).series[target];
    const Rational slope = f1 - f0;
    if (f2 - f0 != Rational(2) * slope) throw std::runtime_error("nonlinearity detected");
    if (slope.is_zero()) throw std::runtime_error("coefficient not determinable at this order");
    found.push_back(-f0 / slope);
  }
  return found;
}

}  // namespace mcorr
