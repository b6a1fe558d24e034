#include "mcorr/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mcorr/engine.hpp"
#include "mcorr/reference_values.hpp"

namespace mcorr {

namespace {

constexpr long kExactHarmonicLimit = 1L << 16;
constexpr long kMaxReferenceN = 1L << 24;
constexpr long kDefaultReferenceN = 1L << 20;

/// Σ_{k=a}^{b-1} 1/k = p/q by binary splitting.
void harmonic_split(long a, long b, mpz_class& p, mpz_class& q) {
  if (b - a <= 16) {
    p = 0;
    q = 1;
    for (long k = a; k < b; ++k) {
      p = p * k + q;
      q *= k;
    }
    return;
  }
  const long m = a + (b - a) / 2;
  mpz_class p1, q1, p2, q2;
  harmonic_split(a, m, p1, q1);
  harmonic_split(m, b, p2, q2);
  p = p1 * q2 + p2 * q1;
  q = q1 * q2;
}

Enclosure harmonic_directed(long n, long precision_bits) {
  const long wp = precision_bits + 2 * static_cast<long>(std::log2(static_cast<double>(n))) + 16;
  BigFloat lo(wp), hi(wp), term(wp);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (long k = n; k >= 1; --k) {
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(k), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), term.get(), MPFR_RNDD);
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(k), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), term.get(), MPFR_RNDU);
  }
  return {std::move(lo), std::move(hi)};
}

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(c); }
const Polynomial kN = poly({0, 1});

CorrectionScheme gamma_base() {
  CorrectionScheme s;
  s.family = Family::gamma;
  return s;
}

std::vector<Rational> refs(const std::string& prefix, std::initializer_list<const char*> suffixes) {
  std::vector<Rational> out;
  for (const char* s : suffixes) out.push_back(reference(prefix + s));
  return out;
}

/// n^deg + Σ c_k n^k with coefficients listed from n^(deg-1) down to n^0.
Polynomial monic_from_descending(const std::vector<Rational>& descending) {
  std::vector<Rational> c(descending.rbegin(), descending.rend());
  c.push_back(Rational(1));
  return Polynomial(std::move(c));
}

/// (n+center)^deg + Σ c_k (n+center)^k, even powers only, listed from
/// (deg-2) down to 0.
Polynomial even_shifted(const Rational& center, int degree, const std::vector<Rational>& descending) {
  std::vector<Rational> basis(static_cast<std::size_t>(degree) + 1);
  basis[degree] = Rational(1);
  for (std::size_t i = 0; i < descending.size(); ++i) basis[degree - 2 * (i + 1)] = descending[i];
  return Polynomial::from_shifted_basis(center, basis);
}

std::map<std::string, GammaScheme> build_catalog() {
  std::map<std::string, GammaScheme> out;
  auto add = [&](GammaScheme g) { out.emplace(g.name, std::move(g)); };

  // H_n - ln n and its successive corrections.
  CorrectionScheme nu = harmonic_minus_log();
  add({"nu0", "H_n - ln n", nu, 1, reference("section4.C0"), false});
  const Polynomial phi1 = poly({reference("section4.phi1.c0"), 1});
  const Polynomial phi2 = monic_from_descending(refs("section4.phi2.", {"c2", "c1", "c0"}));
  const Polynomial phi3 = monic_from_descending(refs("section4.phi3.", {"c6", "c5", "c4", "c3", "c2", "c1", "c0"}));
  nu = nu.with_term({reference("section4.C0"), phi1});
  add({"nu1", "nu0 - (1/2)/(n + 1/6)", nu, 3, reference("section4.C1"), false});
  nu = nu.with_term({reference("section4.C1"), phi2});
  add({"nu2", "nu1 - C_1/Φ_2(n), deg Φ_2 = 3", nu, 7, reference("section4.C2"), false});
  nu = nu.with_term({reference("section4.C2"), phi3});
  add({"nu3", "nu2 - C_2/Φ_3(n), deg Φ_3 = 7", nu, 15, reference("section4.C3"), false});

  CorrectionScheme detemple = gamma_base();
  detemple.logs.push_back({Rational(1), poly({Rational(1, 2), 1})});
  add({"detemple", "H_n - ln(n + 1/2)", detemple, 2, std::nullopt, false});

  CorrectionScheme mortici = gamma_base();
  const Rational top0 = reference("mortici2010.numerator.c0a") + reference("mortici2010.numerator.c0b");
  mortici.logs.push_back({Rational(1), poly({top0, 0, Rational(3, 2), 1})});
  mortici.logs.push_back({Rational(-1), poly({reference("mortici2010.denominator.c0"), 1, 1})});
  add({"mortici2010", "H_n - ln((n^3 + 3n^2/2 + 227/240 + 107/480)/(n^2 + n + 97/240)), verbatim", mortici, 6,
       std::nullopt, true});

  // ln(n ρ(n)) = ln(n^4 ρ(n)) - 3 ln n.
  CorrectionScheme chen_mortici = gamma_base();
  const auto rho = refs("rho.", {"c4", "c3", "c2", "c1"});
  chen_mortici.logs.push_back({Rational(1), monic_from_descending({rho[3], rho[2], rho[1], rho[0]})});
  chen_mortici.logs.push_back({Rational(-3), kN});
  add({"chen-mortici", "H_n - ln(n ρ(n))", chen_mortici, 5, std::nullopt, false});

  const Polynomial p = poly({Rational(1, 3), 1, 1});
  auto power_scheme = [&](const std::vector<Rational>& c) {
    CorrectionScheme s = gamma_base();
    s.logs.push_back({Rational(1, 2), p});
    Polynomial power = p;
    for (const auto& ck : c) {
      power = power * p;
      s = s.with_term({ck, power});
    }
    return s;
  };
  const PowerCorrections derived = derive_power_corrections(4);
  add({"mortici-chen", "H_n - ln(n^2+n+1/3)/2 - Σ c_k/(n^2+n+1/3)^k", power_scheme(derived.coefficients), 12,
       derived.final.constant, false});
  add({"mortici-chen-printed", "mortici-chen with the printed c_4 = +5/1512, verbatim",
       power_scheme(refs("mortici-chen.", {"c2", "c3", "c4", "c5"})), 12, std::nullopt, true});

  std::vector<Rational> a;
  for (int k = 1; k <= 13; ++k) {
    a.push_back(reference("lu.a" + std::to_string(k)));
    add({"lu-r" + std::to_string(k), "H_n - ln n - R_" + std::to_string(k) + "(n)", lu_scheme(a), k + 1,
         reference("lu.C" + std::to_string(k)), false});
  }

  CorrectionScheme example1 = harmonic_minus_log();
  example1.rationals.push_back(RationalFunction(poly({13, 30}), poly({6, 36, 60})));
  example1 = example1.with_term(
      {Rational(1, 200), monic_from_descending(refs("example1.phi.", {"c4", "c3", "c2", "c1", "c0"}))});
  add({"example1", "H_n - ln n - θ_0(n) - (1/200)/Φ(n), deg Φ = 5", example1, 11, reference("example1.limit"),
       false});

  CorrectionScheme mu = harmonic_minus_log();
  mu.rationals.push_back(RationalFunction(poly({-1, 6}), poly({0, 0, 12})));
  mu = mu.with_term({reference("example2.initial.limit"),
                     monic_from_descending(refs("example2.phi.", {"c3", "c2", "c1", "c0"}))});
  add({"example2", "μ(n) = H_n - ln n - (6n-1)/(12n^2) - (1/120)/Φ(n), deg Φ = 4", mu, 10,
       reference("example2.limit"), false});

  CorrectionScheme alt = gamma_base();
  alt.logs.push_back({Rational(1, 2), p});
  const Rational half(1, 2);
  alt = alt.with_term({reference("remark8.C0"), even_shifted(half, 4, refs("remark8.phi1.", {"shifted2", "shifted0"}))});
  alt = alt.with_term(
      {reference("remark8.C1"),
       even_shifted(half, 10, refs("remark8.phi2.", {"shifted8", "shifted6", "shifted4", "shifted2", "shifted0"}))});
  add({"remark8", "H_n - ln(n^2+n+1/3)/2 - C_0/Φ_1(n) - C_1/Φ_2(n), deg 4 and 10", alt,
       static_cast<int>(reference("remark8.rate2").to_double()), reference("remark8.C2"), false});
  return out;
}

const std::map<std::string, GammaScheme>& catalog() {
  static const std::map<std::string, GammaScheme> c = build_catalog();
  return c;
}

}  // namespace

const char* const kGammaDigits50 = "0.57721566490153286060651209008240243104215933593992";

Rational harmonic(long n) {
  if (n < 1) throw std::invalid_argument("harmonic number needs n >= 1");
  mpz_class p, q;
  harmonic_split(1, n + 1, p, q);
  return Rational(p, q);
}

Enclosure harmonic_enclosure(long n, long precision_bits) {
  if (n < 1) throw std::invalid_argument("harmonic number needs n >= 1");
  if (n <= kExactHarmonicLimit) return Enclosure::of(harmonic(n), precision_bits);
  return harmonic_directed(n, precision_bits);
}

PowerCorrections derive_power_corrections(int count) {
  if (count < 0 || count > 12) throw std::invalid_argument("count must lie in [0, 12]");
  CorrectionScheme s = gamma_base();
  const Polynomial p = poly({Rational(1, 3), 1, 1});
  s.logs.push_back({Rational(1, 2), p});
  PowerCorrections out;
  Polynomial power = p;
  const int order = 4 * count + 12;
  for (int k = 0; k <= count; ++k) {
    const Limit l = limit_from_difference(build_difference_series(s, order));
    if (k == count) {
      out.final = l;
      break;
    }
    power = power * p;
    if (l.exponent != power.degree()) throw std::runtime_error("power correction lost its rate");
    out.coefficients.push_back(l.constant);
    s = s.with_term({l.constant, power});
  }
  return out;
}

const std::vector<std::string>& gamma_scheme_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = {"nu0", "nu1", "nu2", "nu3", "detemple", "mortici2010", "chen-mortici",
                                  "mortici-chen", "mortici-chen-printed", "example1", "example2", "remark8"};
    for (int k = 1; k <= 13; ++k) v.push_back("lu-r" + std::to_string(k));
    return v;
  }();
  return names;
}

GammaScheme gamma_scheme(const std::string& name) {
  const auto it = catalog().find(name);
  if (it == catalog().end()) throw std::invalid_argument("unknown gamma scheme '" + name + "'");
  return it->second;
}

Enclosure gamma_approx(const CorrectionScheme& scheme, long n, long precision_bits) {
  if (scheme.family != Family::gamma) throw std::invalid_argument("not a gamma-family scheme");
  if (n < 1) throw std::invalid_argument("gamma approximants need n >= 1");
  const long wp = precision_bits + 32;
  const Rational rn(n);
  Enclosure v = harmonic_enclosure(n, wp);
  for (const auto& log : scheme.logs) v = v - enclose_ln(log.argument(rn), wp) * log.weight;
  return v - Enclosure::of(scheme.rational_part(rn), wp);
}

Enclosure gamma_approx(const GammaScheme& scheme, long n, long precision_bits) {
  return gamma_approx(scheme.scheme, n, precision_bits);
}

Enclosure mu_value(long n, long precision_bits) {
  return gamma_approx(catalog().at("example2").scheme, n, precision_bits);
}

GammaEnclosure gamma_enclosure(long n, long precision_bits) {
  const long wp = precision_bits + 32;
  const Enclosure mu = mu_value(n, wp);
  const Rational c = reference("mu.bound.constant");
  const Rational rn(n);
  const Enclosure lower = mu + Enclosure::of(c / pow(rn + Rational(3, 4), 10), wp);
  const Enclosure upper = mu + Enclosure::of(c / pow(rn - Rational(1, 4), 10), wp);
  return {Enclosure(lower.lo(), upper.hi()), n};
}

long gamma_enclosure_n_for_width(double max_width) {
  if (!(max_width > 0)) throw std::invalid_argument("width must be positive");
  const double n = std::ceil(std::pow(0.05 / std::max(max_width, 1e-300), 1.0 / 11.0));
  return std::max(2L, n > 1e15 ? static_cast<long>(1e15) : static_cast<long>(n));
}

Enclosure gamma_reference(long precision_bits, double max_width) {
  static std::mutex mutex;
  static std::map<std::pair<long, long>, Enclosure> cache;

  const bool clamp = !(max_width > 0);
  const double target = clamp ? std::ldexp(1.0, -static_cast<int>(std::min(precision_bits - 16, 1000L))) : max_width;
  long n = gamma_enclosure_n_for_width(target);
  if (clamp) n = std::min(n, kDefaultReferenceN);
  if (n > kMaxReferenceN) throw std::runtime_error("gamma reference width out of reach (needs n > 2^24)");
  const long wp = std::max(precision_bits, static_cast<long>(-std::log2(target)) + 24);

  std::lock_guard lock(mutex);
  const auto key = std::pair{n, wp};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Enclosure g = gamma_enclosure(n, wp).value;
  for (int attempt = 0; !clamp && mpfr_cmp_d(g.width().get(), max_width) > 0; ++attempt) {
    if (attempt == 4 || n * 2 > kMaxReferenceN)
      throw std::runtime_error("gamma reference width out of reach");
    n *= 2;
    g = gamma_enclosure(n, wp).value;
  }
  return cache.emplace(key, g).first->second;
}

Enclosure enclose_c0(long precision_bits, double max_width) {
  const long wp = precision_bits + 16;
  const Enclosure gamma = gamma_reference(wp, max_width > 0 ? max_width / 2 : 0);
  return (gamma + enclose_ln2(wp) * Rational(4)) / enclose_pi(wp);
}

VerificationReport verify_gamma_inequalities(long n_lo, long n_hi, long precision_bits,
                                             const std::vector<std::string>& only) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  auto wanted = [&](const char* name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };
  const Rational c = reference("mu.bound.constant");
  const CorrectionScheme r3 = catalog().at("lu-r3").scheme;
  // The tightest margins are about c·n^-11 (two-sided μ bound).
  const double base_width = 1e-4 * c.to_double() * std::pow(static_cast<double>(n_hi) + 1, -11.0);
  auto gamma_at = [=](long bits) {
    const double level = std::log2(static_cast<double>(bits) / static_cast<double>(precision_bits));
    return gamma_reference(bits, base_width * std::pow(1e-3, std::max(0.0, level)));
  };

  return run_range(n_lo, n_hi, [&](long n) {
    std::vector<CheckResult> out;
    const Rational rn(n);
    if (wanted("mu-lower"))
      out.push_back(certify("mu-lower", n, true, precision_bits, [&](long bits) {
        return gamma_at(bits) - mu_value(n, bits) - Enclosure::of(c / pow(rn + Rational(3, 4), 10), bits);
      }));
    if (wanted("mu-upper"))
      out.push_back(certify("mu-upper", n, true, precision_bits, [&](long bits) {
        return Enclosure::of(c / pow(rn - Rational(1, 4), 10), bits) - (gamma_at(bits) - mu_value(n, bits));
      }));
    if (wanted("mu-increasing"))
      out.push_back(certify("mu-increasing", n, true, precision_bits,
                            [&](long bits) { return mu_value(n + 1, bits) - mu_value(n, bits); }));
    if (wanted("r3-lower"))
      out.push_back(certify("r3-lower", n, true, precision_bits, [&](long bits) {
        return gamma_approx(r3, n, bits) - gamma_at(bits) - Enclosure::of(Rational(1) / (120 * pow(rn + 1, 4)), bits);
      }));
    if (wanted("r3-upper") && n >= 2)
      out.push_back(certify("r3-upper", n, true, precision_bits, [&](long bits) {
        return Enclosure::of(Rational(1) / (120 * pow(rn - 1, 4)), bits) - (gamma_approx(r3, n, bits) - gamma_at(bits));
      }));
    return out;
  });
}

}  // namespace mcorr
