#pragma once

#include <string>

#include "mcorr/derive.hpp"
#include "mcorr/reproduce.hpp"
#include "mcorr/scheme.hpp"
#include "mcorr/series.hpp"

namespace mcorr {

/// {"coeffs": ["p/q", ...], "order": N}
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

/// {"schema": "mcorr.scheme/1", "family": ..., "initial": {"logs": [...],
///  "rationals": [...]}, "terms": [{"C": "p/q", "phi": [...]}], "convergent_index": K}
/// Polynomials are arrays of coefficient strings, constant term first.
std::string scheme_to_json(const CorrectionScheme& s);
CorrectionScheme scheme_from_json(const std::string& text);

/// {"schema": "mcorr.reproduce/1", "ok": bool, "items": [{"target", "key",
///  "expected", "actual", "status", "note"}]}
std::string reproduce_to_json(const ReproduceReport& report);

/// {"schema": "mcorr.derive/1", "target": ..., "steps": [{"rate", "C", "phi",
///  "next_rate", "next_C"}], "scheme": <mcorr.scheme/1>}
std::string derivation_to_json(const Derivation& d);

}  // namespace mcorr
