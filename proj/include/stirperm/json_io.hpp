#pragma once

#include <vector>

#include "json.hpp"

#include "stirperm/polynomial.hpp"
#include "stirperm/series.hpp"

namespace stirperm {

using Json = nlohmann::ordered_json;

/// {"vars":[...],"terms":[{"exp":[...],"coef":"..."}]}. Exponents are listed
/// for `vars` only; a term using any other variable throws Error.
Json to_json(const Polynomial& poly, const std::vector<Var>& vars);
Polynomial polynomial_from_json(const Json& j);  // throws ParseError

/// {"order":N,"vars":[...],"coefficients":[polynomial objects]}.
Json to_json(const TruncatedSeries& s, const std::vector<Var>& vars);
TruncatedSeries series_from_json(const Json& j);  // throws ParseError

/// Variables occurring in any term, in p, q, r, z order.
std::vector<Var> vars_used(const Polynomial& poly);

}  // namespace stirperm
