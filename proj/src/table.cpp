#include "mcorr/table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcorr/gamma.hpp"
#include "mcorr/landau.hpp"

namespace mcorr {

const std::vector<std::string>& landau_scheme_names() {
  static const std::vector<std::string> names = {"level0", "level1", "level2"};
  return names;
}

namespace {

int landau_level(const std::string& name) {
  const auto& names = landau_scheme_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown landau scheme '" + name + "'");
  return static_cast<int>(it - names.begin());
}

bool resolved(const Enclosure& e) {
  if (e.contains_zero()) return false;
  return e.width_double() <= 1e-6 * std::fabs(e.mid_double());
}

Enclosure gamma_error(const GammaScheme& g, long n, long bits) {
  const Enclosure approx = gamma_approx(g, n, bits);
  Enclosure err = approx - gamma_reference(bits);
  // Tighten the reference when the error sits near its width.
  double width = 1e-70;
  while (!resolved(err) && width > 1e-78) {
    err = approx - gamma_reference(bits, width);
    width *= 1e-4;
  }
  return err;
}

}  // namespace

std::vector<TableRow> make_table(const std::string& family, const std::vector<std::string>& schemes,
                                 const std::vector<long>& n_values, long precision_bits) {
  std::vector<TableRow> rows;
  if (family == "gamma") {
    for (const auto& name : schemes) {
      const GammaScheme g = gamma_scheme(name);
      for (long n : n_values) {
        if (n < 1) throw std::invalid_argument("gamma schemes need n >= 1");
        rows.push_back({n, name, gamma_error(g, n, precision_bits)});
      }
    }
  } else if (family == "landau") {
    for (const auto& name : schemes) {
      const int level = landau_level(name);
      for (long n : n_values) {
        if (n < 0) throw std::invalid_argument("landau schemes need n >= 0");
        rows.push_back({n, name, landau_error(n, level, precision_bits), landau_G(n).str()});
      }
    }
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return rows;
}

}  // namespace mcorr
