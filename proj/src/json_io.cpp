#include "stirperm/json_io.hpp"

#include <algorithm>

#include "stirperm/error.hpp"

namespace stirperm {

std::vector<Var> vars_used(const Polynomial& poly)
{
    std::array<bool, kVarCount> seen{};
    for (const auto& [e, c] : poly.terms()) {
        for (std::size_t i = 0; i < kVarCount; ++i) seen[i] = seen[i] || e[i] != 0;
    }
    std::vector<Var> out;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (seen[i]) out.push_back(static_cast<Var>(i));
    }
    return out;
}

namespace {

Json var_list(const std::vector<Var>& vars)
{
    Json out = Json::array();
    for (Var v : vars) out.push_back(std::string(1, var_name(v)));
    return out;
}

std::vector<Var> parse_var_list(const Json& j)
{
    if (!j.is_array()) throw ParseError("\"vars\" must be an array");
    std::vector<Var> vars;
    for (const auto& item : j) {
        if (!item.is_string() || item.get<std::string>().size() != 1) throw ParseError("bad variable name in \"vars\"");
        vars.push_back(parse_var(item.get<std::string>()[0]));
    }
    return vars;
}

Json terms_of(const Polynomial& poly, const std::vector<Var>& vars)
{
    Json terms = Json::array();
    for (const auto& [e, c] : poly.terms()) {
        Json exp = Json::array();
        for (std::size_t i = 0; i < kVarCount; ++i) {
            const bool listed = std::find(vars.begin(), vars.end(), static_cast<Var>(i)) != vars.end();
            if (!listed && e[i] != 0) {
                throw Error(std::string("term uses variable ") + var_name(static_cast<Var>(i)) + " outside the listed vars");
            }
        }
        for (Var v : vars) exp.push_back(e[static_cast<std::size_t>(v)]);
        Json term = Json::object();
        term["exp"] = std::move(exp);
        term["coef"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    return terms;
}

Polynomial from_terms(const Json& terms, const std::vector<Var>& vars)
{
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
    Polynomial out;
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coef")) {
            throw ParseError("each term needs \"exp\" and \"coef\"");
        }
        const Json& exp = term["exp"];
        if (!exp.is_array() || exp.size() != vars.size()) throw ParseError("\"exp\" length must match \"vars\"");
        Exponents e{};
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!exp[i].is_number_integer()) throw ParseError("exponents must be integers");
            e[static_cast<std::size_t>(vars[i])] = exp[i].get<int>();
        }
        const Json& coef = term["coef"];
        if (!coef.is_string()) throw ParseError("\"coef\" must be a decimal string");
        BigInt c;
        try {
            c = BigInt(coef.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("\"coef\" is not a decimal integer: " + coef.get<std::string>());
        }
        out += Polynomial::monomial(e, c);
    }
    return out;
}

}  // namespace

Json to_json(const Polynomial& poly, const std::vector<Var>& vars)
{
    Json out = Json::object();
    out["vars"] = var_list(vars);
    out["terms"] = terms_of(poly, vars);
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
        throw ParseError("polynomial JSON needs \"vars\" and \"terms\"");
    }
    return from_terms(j["terms"], parse_var_list(j["vars"]));
}

Json to_json(const TruncatedSeries& s, const std::vector<Var>& vars)
{
    Json out = Json::object();
    out["order"] = s.order();
    out["vars"] = var_list(vars);
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c, vars));
    out["coefficients"] = std::move(coeffs);
    return out;
}

TruncatedSeries series_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("coefficients")) {
        throw ParseError("series JSON needs \"order\" and \"coefficients\"");
    }
    const int order = j["order"].get<int>();
    const Json& coeffs = j["coefficients"];
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
        throw ParseError("series JSON must carry order + 1 coefficients");
    }
    std::vector<Polynomial> cs;
    for (const auto& c : coeffs) cs.push_back(polynomial_from_json(c));
    return TruncatedSeries(order, std::move(cs));
}

}  // namespace stirperm
