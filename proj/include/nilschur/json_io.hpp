#pragma once

#include <string>

#include "json.hpp"
#include "nilschur/grassmann.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/report.hpp"

namespace nilschur {

/// {"flavor": "free"|"cyclotomic", "ell": int, "n": int,
///  "terms": [{"perm": [int...], "exps": [int...], "coeff": "decimal"}]}
/// Terms appear in canonical display order; coefficients are decimal strings
/// so consumers need no integer-width assumptions.
nlohmann::json element_to_json(const NilHeckeElement& x);

/// Inverse of element_to_json; revalidates every field and rebuilds the
/// element through the ordinary arithmetic path.  Throws InvalidInput on
/// malformed or out-of-range data.
NilHeckeElement element_from_json(const nlohmann::json& j);

/// {"classes": [{"index": [int...], "coeff": "decimal"}]}
nlohmann::json class_to_json(const CohomologyClass& x);

/// Inverse of class_to_json for the given ring (the schema does not carry the
/// ring parameters).  Throws InvalidInput on malformed or out-of-range data.
CohomologyClass class_from_json(const nlohmann::json& j, const GrassmannRing& ring);

/// {"title": str, "passed": bool, "cases": [{"name", "passed", "witness"}]}
nlohmann::json report_to_json(const VerificationReport& report);

} // namespace nilschur
