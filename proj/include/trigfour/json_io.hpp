#pragma once

#include <trigfour/expansions.hpp>
#include <trigfour/reciprocal.hpp>
#include <trigfour/verify.hpp>

#include <json.hpp>

namespace trigfour {

// JSON wire formats. Rationals travel as canonical "p" / "p/q" strings so
// exact values round-trip bit-for-bit.

nlohmann::json trig_polynomial_to_json(const TrigPolynomial& p);
TrigPolynomial trig_polynomial_from_json(const nlohmann::json& j);

nlohmann::json power_expansion_to_json(const PowerExpansion& p);
PowerExpansion power_expansion_from_json(const nlohmann::json& j);

nlohmann::json real_trig_series_to_json(const RealTrigSeries& s);

/// Reciprocal-series document: the series plus its defining parameters,
/// {"a":2.0,"N":25,"constant":...,"cos":[...],"sin":[...],"tail_bound":...}.
nlohmann::json reciprocal_series_to_json(const ReciprocalParams& p, long N,
                                         const RealTrigSeries& s);

nlohmann::json verification_report_to_json(const VerificationReport& r);

}  // namespace trigfour
