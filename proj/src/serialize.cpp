#include "mcorr/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mcorr {

namespace {

using json = nlohmann::ordered_json;

json poly_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Polynomial poly_from(const json& a) {
  std::vector<Rational> c;
  for (const auto& v : a) c.push_back(Rational::parse(v.get<std::string>()));
  return Polynomial(std::move(c));
}

}  // namespace

std::string series_to_json(const TruncatedSeries& s) {
  json j;
  j["coeffs"] = json::array();
  for (const auto& c : s.coeffs()) j["coeffs"].push_back(c.str());
  j["order"] = s.order();
  return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(Rational::parse(v.get<std::string>()));
  const int order = j.at("order").get<int>();
  if (static_cast<int>(c.size()) != order + 1) throw std::invalid_argument("series needs order+1 coefficients");
  return TruncatedSeries(std::move(c), order);
}

std::string scheme_to_json(const CorrectionScheme& s) {
  json j;
  j["schema"] = "mcorr.scheme/1";
  j["family"] = to_string(s.family);
  json logs = json::array();
  for (const auto& l : s.logs) logs.push_back({{"weight", l.weight.str()}, {"argument", poly_json(l.argument)}});
  json rationals = json::array();
  for (const auto& r : s.rationals)
    rationals.push_back({{"numerator", poly_json(r.numerator())}, {"denominator", poly_json(r.denominator())}});
  j["initial"] = {{"logs", logs}, {"rationals", rationals}};
  j["terms"] = json::array();
  for (const auto& t : s.terms) j["terms"].push_back({{"C", t.constant.str()}, {"phi", poly_json(t.phi)}});
  j["convergent_index"] = s.convergent_index;
  return j.dump(2);
}

CorrectionScheme scheme_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.value("schema", "") != "mcorr.scheme/1") throw std::invalid_argument("unsupported scheme schema");
  CorrectionScheme s;
  s.family = family_from_string(j.at("family").get<std::string>());
  const json& initial = j.at("initial");
  for (const auto& l : initial.at("logs"))
    s.logs.push_back({Rational::parse(l.at("weight").get<std::string>()), poly_from(l.at("argument"))});
  for (const auto& r : initial.at("rationals"))
    s.rationals.emplace_back(poly_from(r.at("numerator")), poly_from(r.at("denominator")));
  for (const auto& t : j.at("terms"))
    s = s.with_term({Rational::parse(t.at("C").get<std::string>()), poly_from(t.at("phi"))});
  s.convergent_index = j.value("convergent_index", 0);
  return s;
}

std::string reproduce_to_json(const ReproduceReport& report) {
  json j;
  j["schema"] = "mcorr.reproduce/1";
  j["ok"] = report.ok();
  j["items"] = json::array();
  for (const auto& i : report.items)
    j["items"].push_back({{"target", i.target},
                          {"key", i.key},
                          {"expected", i.expected},
                          {"actual", i.actual},
                          {"status", to_string(i.status)},
                          {"note", i.note}});
  return j.dump(2);
}

std::string derivation_to_json(const Derivation& d) {
  json j;
  j["schema"] = "mcorr.derive/1";
  j["target"] = d.target;
  j["steps"] = json::array();
  for (const auto& st : d.steps)
    j["steps"].push_back({{"rate", st.before.exponent},
                          {"C", st.before.constant.str()},
                          {"phi", poly_json(st.phi)},
                          {"next_rate", st.after.exponent},
                          {"next_C", st.after.constant.str()}});
  j["scheme"] = json::parse(scheme_to_json(d.scheme));
  return j.dump(2);
}

}  // namespace mcorr
