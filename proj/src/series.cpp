#include "mcorr/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcorr {

TruncatedSeries::TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::monomial(int k, int order, const Rational& c) {
  TruncatedSeries s(order);
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial_in_x(const Polynomial& p, int order) {
  std::vector<Rational> v(p.coeffs().begin(),
                          p.coeffs().begin() + std::min<std::ptrdiff_t>(p.degree() + 1, order + 1));
  return TruncatedSeries(std::move(v), order);
}

const Rational& TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > order_) throw std::out_of_range("series coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(k)];
}

int TruncatedSeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
  return order_ + 1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1),
                         new_order);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int order = std::min(f.order_, g.order_);
  TruncatedSeries r(order);
  for (int k = 0; k <= order; ++k) r.coeffs_[k] = f.coeffs_[k] + g.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return f + (-g); }

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int vf = f.valuation();
  const int vg = g.valuation();
  const int order = std::min(f.order_ + vg, g.order_ + vf);
  TruncatedSeries r(order);
  for (int i = vf; i <= std::min(f.order_, order); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (int j = vg; j <= std::min(g.order_, order - i); ++j) r.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int vg = g.valuation();
  if (vg > g.order_) throw std::domain_error("zero divisor series");
  const int vf = f.valuation();
  if (vf < vg && vf <= f.order_) throw std::domain_error("quotient is not a power series");
  // Cancel x^vg from both operands.
  const int nf = f.order_ - vg;
  const int ng = g.order_ - vg;
  if (nf < 0) throw std::domain_error("dividend order too small for divisor valuation");
  const int vf_shifted = std::min(vf, f.order_ + 1) - vg;
  const int order = std::min(nf, ng + vf_shifted);
  std::vector<Rational> num(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) num[k] = f.coeffs_[k + vg];
  const Rational& g0 = g.coeffs_[vg];
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Rational acc = num[k];
    for (int j = 1; j <= std::min(k, ng); ++j) acc -= g.coeffs_[vg + j] * q[k - j];
    q[k] = acc / g0;
  }
  return TruncatedSeries(std::move(q), order);
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f) {
  TruncatedSeries r = f;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& f, const Rational& c) {
  TruncatedSeries r = f;
  r.coeffs_[0] += c;
  return r;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    out += abs(c).str();
    if (k > 0) out += "*x^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(order_ + 1) + ")";
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int vg = g.valuation();
  if (!g[0].is_zero()) throw std::domain_error("inner series of a composition must vanish at 0");
  const int from_f = (f.order() + 1) * std::min(vg, g.order() + 1) - 1;
  const int order = std::min({f.order(), g.order(), from_f});
  const TruncatedSeries inner = g.truncated(std::min(g.order(), order));
  // Horner: f_0 + g (f_1 + g (f_2 + ...)), each step truncated to order.
  TruncatedSeries acc(order);
  for (int k = f.order(); k >= 0; --k) {
    acc = (acc * inner).truncated(order) + f[k];
  }
  return acc;
}

TruncatedSeries series_compose_shift(const TruncatedSeries& f, long step) {
  const int order = f.order();
  // x/(1 + step x) = Σ_{k≥1} (-step)^{k-1} x^k
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1);
  Rational term(1);
  for (int k = 1; k <= order; ++k) {
    s[k] = term;
    term *= Rational(-step);
  }
  return compose(f, TruncatedSeries(std::move(s), order));
}

TruncatedSeries series_compose_shift(const TruncatedSeries& f) { return series_compose_shift(f, 1); }

TruncatedSeries series_from_rational_function(const RationalFunction& rf, int order) {
  const Polynomial& p = rf.numerator();
  const Polynomial& q = rf.denominator();
  if (p.is_zero()) return TruncatedSeries(order);
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp > dq) throw std::domain_error("not proper at infinity");
  const int lead_power = dq - dp;
  if (lead_power > order) return TruncatedSeries(order);
  const int inner_order = order - lead_power;
  // P(1/x) x^dp and Q(1/x) x^dq are the coefficient-reversed polynomials.
  std::vector<Rational> prev(static_cast<std::size_t>(inner_order) + 1);
  std::vector<Rational> qrev(static_cast<std::size_t>(dq) + 1);
  for (int k = 0; k <= std::min(dp, inner_order); ++k) prev[k] = p.coeff(dp - k);
  for (int k = 0; k <= dq; ++k) qrev[k] = q.coeff(dq - k);
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  std::vector<Rational> quot(static_cast<std::size_t>(inner_order) + 1);
  for (int k = 0; k <= inner_order; ++k) {
    Rational acc = prev[k];
    for (int j = 1; j <= std::min(k, dq); ++j) acc -= qrev[j] * quot[k - j];
    quot[k] = acc / qrev[0];
    out[k + lead_power] = quot[k];
  }
  return TruncatedSeries(std::move(out), order);
}

TruncatedSeries series_log(const TruncatedSeries& f) {
  if (f[0] != Rational(1)) throw std::domain_error("series_log requires constant term 1");
  const int order = f.order();
  std::vector<Rational> l(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    Rational acc = Rational(k) * f[k];
    for (int j = 1; j < k; ++j) acc -= Rational(j) * l[j] * f[k - j];
    l[k] = acc / Rational(k);
  }
  return TruncatedSeries(std::move(l), order);
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
  if (!f[0].is_zero()) throw std::domain_error("series_exp requires constant term 0");
  const int order = f.order();
  std::vector<Rational> e(static_cast<std::size_t>(order) + 1);
  e[0] = Rational(1);
  for (int k = 1; k <= order; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += Rational(j) * f[j] * e[k - j];
    e[k] = acc / Rational(k);
  }
  return TruncatedSeries(std::move(e), order);
}

TruncatedSeries series_log_poly(const Polynomial& p, int m, int order) {
  if (p.degree() != m || !p.is_monic())
    throw std::domain_error("series_log_poly requires a monic polynomial of degree m");
  std::vector<Rational> rev(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= std::min(m, order); ++k) rev[k] = p.coeff(m - k);
  return series_log(TruncatedSeries(std::move(rev), order));
}

RationalFunction cf_collapse(const std::vector<ContinuedFractionLevel>& levels) {
  if (levels.empty()) throw std::invalid_argument("continued fraction needs at least one level");
  auto it = levels.rbegin();
  if (it->partial_denominator.is_zero()) throw std::domain_error("degenerate continued fraction");
  RationalFunction value(it->partial_numerator, it->partial_denominator);
  for (++it; it != levels.rend(); ++it) {
    const RationalFunction tail = RationalFunction(it->partial_denominator) + value;
    if (tail.numerator().is_zero()) throw std::domain_error("degenerate continued fraction");
    value = RationalFunction(it->partial_numerator) / tail;
    value = value.reduced();
  }
  return value.reduced();
}

}  // namespace mcorr
