#include <trigfour/json_io.hpp>

namespace trigfour {

using nlohmann::json;

namespace {

json coeff_map_to_json(const std::map<long, Rational>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = rational_to_string(v);
    return j;
}

void coeff_map_from_json(const json& j, const std::function<void(long, Rational)>& put) {
    if (!j.is_object()) throw std::invalid_argument("expected an object of index -> rational");
    for (const auto& [k, v] : j.items()) put(std::stol(k), rational_from_string(v.get<std::string>()));
}

}  // namespace

json trig_polynomial_to_json(const TrigPolynomial& p) {
    return json{{"constant", rational_to_string(p.constant_term())},
                {"cos", coeff_map_to_json(p.cos_terms())},
                {"sin", coeff_map_to_json(p.sin_terms())}};
}

TrigPolynomial trig_polynomial_from_json(const json& j) {
    TrigPolynomial p;
    p.add_constant(rational_from_string(j.at("constant").get<std::string>()));
    coeff_map_from_json(j.at("cos"), [&](long n, Rational c) { p.add_cos(n, c); });
    coeff_map_from_json(j.at("sin"), [&](long n, Rational c) { p.add_sin(n, c); });
    return p;
}

json power_expansion_to_json(const PowerExpansion& p) {
    return json{{"base", p.base() == TrigBase::Cos ? "cos" : "sin"},
                {"cos_cofactor", p.cos_cofactor()},
                {"coeffs", coeff_map_to_json(p.coeffs())}};
}

PowerExpansion power_expansion_from_json(const json& j) {
    const auto base_str = j.at("base").get<std::string>();
    if (base_str != "cos" && base_str != "sin")
        throw std::invalid_argument("power expansion base must be cos or sin");
    PowerExpansion p(base_str == "cos" ? TrigBase::Cos : TrigBase::Sin,
                     j.at("cos_cofactor").get<bool>());
    coeff_map_from_json(j.at("coeffs"), [&](long e, Rational c) { p.add_term(e, c); });
    return p;
}

json real_trig_series_to_json(const RealTrigSeries& s) {
    return json{{"constant", s.constant},
                {"cos", s.cos_terms},
                {"sin", s.sin_terms},
                {"tail_bound", s.tail_bound}};
}

json reciprocal_series_to_json(const ReciprocalParams& p, long N, const RealTrigSeries& s) {
    json j = real_trig_series_to_json(s);
    j["a"] = p.a();
    j["N"] = N;
    return j;
}

json verification_report_to_json(const VerificationReport& r) {
    return json{{"max_abs_error", r.max_abs_error},
                {"errors_constant", r.errors_constant},
                {"errors_cos", r.errors_cos},
                {"errors_sin", r.errors_sin},
                {"samples_used", r.samples_used},
                {"harmonics_checked", r.harmonics_checked}};
}

}  // namespace trigfour
