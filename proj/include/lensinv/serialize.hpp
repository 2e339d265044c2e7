#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "lensinv/cyclotomic.hpp"
#include "lensinv/lens_invariants.hpp"
#include "lensinv/ohtsuki_series.hpp"
#include "lensinv/rational.hpp"
#include "lensinv/rt_oracle.hpp"

namespace lensinv {

using Json = nlohmann::json;

inline Json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

inline Integer integer_from_json(const Json& j)
{
    if (j.is_string())
        return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

/// [numerator, denominator]
inline Json to_json(const Rational& x)
{
    return Json::array({integer_to_json(x.numerator()), integer_to_json(x.denominator())});
}

inline Rational rational_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorKind::invalid_argument, "rational must be a [num, den] pair");
    return {integer_from_json(j[0]), integer_from_json(j[1])};
}

/// {"order": N, "coeffs": [[num, den], ...]}
inline Json to_json(const Cyclotomic& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(to_json(c));
    return {{"order", x.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(rational_from_json(c));
    return Cyclotomic::from_coeffs(j.at("order").get<std::int64_t>(), std::move(coeffs));
}

inline Json to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const FormalSeries& s)
{
    Json out = Json::array();
    for (const auto& c : s.coeffs())
        out.push_back(to_json(c));
    return out;
}

inline Json to_json(const TauPrimeResult& res)
{
    Json j{{"r", res.r}, {"c", res.c}, {"branch", std::string(to_string(res.branch))}, {"value", to_json(res.value)}};
    if (res.branch == Branch::case_two)
        j["eta"] = res.eta;
    return j;
}

inline Json to_json(const VerifyReport& rep)
{
    Json j{{"p", rep.p},
           {"q", rep.q},
           {"r", rep.r},
           {"branch", std::string(to_string(rep.branch))},
           {"match", std::string(to_string(rep.match))},
           {"abs_error", rep.abs_error},
           {"tolerance", rep.tolerance},
           {"formula_value", to_json(rep.formula_value)},
           {"oracle_value", to_json(rep.oracle_value)}};
    if (rep.branch == Branch::case_two) {
        j["eta"] = rep.eta;
        Json conv = Json::object();
        for (const auto& c : rep.conventions)
            conv[std::string(to_string(c.convention))] = {{"integral", c.integral},
                                                          {"match", std::string(to_string(c.match))}};
        j["conventions"] = conv;
    }
    return j;
}

} // namespace lensinv
