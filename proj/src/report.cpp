#include "mcorr/report.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace mcorr {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const CheckResult& r) { return r.status == s; }));
}

CheckStatus VerificationReport::overall() const {
  if (count(CheckStatus::fail) > 0) return CheckStatus::fail;
  if (count(CheckStatus::inconclusive) > 0) return CheckStatus::inconclusive;
  return CheckStatus::pass;
}

void VerificationReport::append(const VerificationReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

CheckStatus classify(const Enclosure& slack, bool strict) {
  const int lo = mpfr_sgn(slack.lo().get());
  const int hi = mpfr_sgn(slack.hi().get());
  if (strict) {
    if (lo > 0) return CheckStatus::pass;
    if (hi <= 0) return CheckStatus::fail;
  } else {
    if (lo >= 0) return CheckStatus::pass;
    if (hi < 0) return CheckStatus::fail;
  }
  return CheckStatus::inconclusive;
}

CheckResult certify(const std::string& inequality, long n, bool strict, long precision_bits,
                    const std::function<Enclosure(long)>& slack) {
  CheckResult r{inequality, n, CheckStatus::inconclusive, 0, precision_bits};
  for (long bits = precision_bits;; bits *= 2) {
    bits = std::min(bits, kMaxPrecisionBits);
    const Enclosure s = slack(bits);
    r.status = classify(s, strict);
    r.margin = s.mid_double();
    r.precision_bits = bits;
    if (r.status != CheckStatus::inconclusive || bits >= kMaxPrecisionBits) return r;
  }
}

VerificationReport run_range(long n_lo, long n_hi,
                             const std::function<std::vector<CheckResult>(long)>& per_n) {
  if (n_hi < n_lo) throw std::invalid_argument("empty n range");
  const long count = n_hi - n_lo + 1;
  std::vector<std::vector<CheckResult>> slots(static_cast<std::size_t>(count));
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        slots[static_cast<std::size_t>(i)] = per_n(n_lo + i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                          static_cast<unsigned>(std::min<long>(count, 64))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  VerificationReport report;
  for (auto& slot : slots) report.results.insert(report.results.end(), slot.begin(), slot.end());
  return report;
}

std::string to_json_lines(const VerificationReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    nlohmann::ordered_json j;
    j["inequality"] = r.inequality;
    j["n"] = r.n;
    j["status"] = to_string(r.status);
    j["margin"] = r.margin;
    j["precision_bits"] = r.precision_bits;
    out += j.dump() + "\n";
  }
  return out;
}

std::string summary(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    if (r.status == CheckStatus::pass) continue;
    os << to_string(r.status) << " " << r.inequality << " n=" << r.n << " margin=" << r.margin
       << " bits=" << r.precision_bits << "\n";
  }
  os << report.results.size() << " checks: " << report.count(CheckStatus::pass) << " PASS, "
     << report.count(CheckStatus::inconclusive) << " INCONCLUSIVE, " << report.count(CheckStatus::fail)
     << " FAIL\n";
  return os.str();
}

namespace {

std::string outward(const BigFloat& v, bool up) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, up ? "%.16RUe" : "%.16RDe", v.get());
  std::string s(buffer);
  mpfr_free_str(buffer);
  return s;
}

BigFloat parse_directed(const std::string& text, long bits, mpfr_rnd_t rnd) {
  BigFloat v(bits);
  if (mpfr_set_str(v.get(), text.c_str(), 10, rnd) != 0) throw std::invalid_argument("bad number '" + text + "'");
  return v;
}

std::string lo_text(const TableRow& r) { return r.error_lo_text.empty() ? outward(r.error.lo(), false) : r.error_lo_text; }
std::string hi_text(const TableRow& r) { return r.error_hi_text.empty() ? outward(r.error.hi(), true) : r.error_hi_text; }

}  // namespace

std::string to_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,scheme,error_lo,error_hi,exact\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + r.scheme + "," + lo_text(r) + "," + hi_text(r) + "," + r.exact + "\n";
  return out;
}

std::string to_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = "mcorr.table/1";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["scheme"] = r.scheme;
    row["error_lo"] = lo_text(r);
    row["error_hi"] = hi_text(r);
    if (r.exact.empty())
      row["exact"] = nullptr;
    else
      row["exact"] = r.exact;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::vector<TableRow> table_from_json(const std::string& text, long precision_bits) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("schema", "") != "mcorr.table/1") throw std::invalid_argument("unsupported table schema");
  std::vector<TableRow> rows;
  for (const auto& row : j.at("rows")) {
    const std::string lo = row.at("error_lo").get<std::string>();
    const std::string hi = row.at("error_hi").get<std::string>();
    rows.push_back({row.at("n").get<long>(), row.at("scheme").get<std::string>(),
                    Enclosure(parse_directed(lo, precision_bits, MPFR_RNDD), parse_directed(hi, precision_bits, MPFR_RNDU)),
                    row.contains("exact") && row["exact"].is_string() ? row["exact"].get<std::string>() : "", lo, hi});
  }
  return rows;
}

}  // namespace mcorr
