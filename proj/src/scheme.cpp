#include "mcorr/scheme.hpp"

#include <stdexcept>

namespace mcorr {

std::string to_string(Family f) { return f == Family::gamma ? "gamma" : "landau"; }

Family family_from_string(const std::string& s) {
  if (s == "gamma") return Family::gamma;
  if (s == "landau") return Family::landau;
  throw std::invalid_argument("unknown family '" + s + "'");
}

void CorrectionTerm::validate() const {
  if (constant.is_zero()) throw std::invalid_argument("correction constant must be nonzero");
  if (phi.degree() < 1 || !phi.is_monic())
    throw std::invalid_argument("correction denominator must be monic of degree >= 1");
}

CorrectionScheme CorrectionScheme::with_term(CorrectionTerm term) const {
  term.validate();
  CorrectionScheme out = *this;
  out.terms.push_back(std::move(term));
  return out;
}

Rational CorrectionScheme::rational_part(const Rational& n) const {
  Rational acc(0);
  for (const auto& r : rationals) acc += r(n);
  for (const auto& t : terms) {
    const Rational d = t.phi(n);
    if (d.is_zero()) throw std::domain_error("correction denominator vanishes at n = " + n.str());
    acc += t.constant / d;
  }
  return acc;
}

CorrectionScheme harmonic_minus_log() {
  CorrectionScheme s;
  s.family = Family::gamma;
  s.logs.push_back({Rational(1), Polynomial({Rational(0), Rational(1)})});
  return s;
}

CorrectionScheme landau_initial() {
  CorrectionScheme s;
  s.family = Family::landau;
  s.logs.push_back({Rational(1), Polynomial({Rational(3, 4), Rational(1)})});
  return s;
}

}  // namespace mcorr
