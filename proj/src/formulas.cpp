#include "stirperm/formulas.hpp"

#include "stirperm/error.hpp"

namespace stirperm::formulas {

namespace {

void require_positive(int n, const char* what)
{
    if (n < 1) throw Error(std::string(what) + " requires n >= 1, got " + std::to_string(n));
}

}  // namespace

BigInt count_avoid_213(int n)
{
    return exact_div(binom(3 * n, n), 2 * n + 1, "count_avoid_213");
}

BigInt count_avoid_123(int n)
{
    BigInt total = 0;
    for (int j = 0; j <= n; ++j) {
        total += exact_div(binom(n, j) * binom(n + j - 1, n - j), n + 1 - j, "count_avoid_123 term");
    }
    return total;
}

BigInt count_213_by_stats(int n, int m, int d, int k)
{
    require_positive(n, "count_213_by_stats");
    if (m + d + k != 2 * n - 1) return 0;
    return exact_div(binom(n, m + 1) * binom(n, d + 1) * binom(n, k), n, "count_213_by_stats");
}

Polynomial distribution_213(int n)
{
    Polynomial out;
    for (int k = 0; k <= 2 * n - 1; ++k) {
        for (int d = 0; d + k <= 2 * n - 1; ++d) {
            const int m = 2 * n - 1 - k - d;
            BigInt c = count_213_by_stats(n, m, d, k);
            if (c != 0) out += Polynomial::monomial({k, d, m, 0}, c);
        }
    }
    return out;
}

Polynomial plateau_poly_213(int n)
{
    require_positive(n, "plateau_poly_213");
    Polynomial out;
    for (int i = 0; i <= n - 1; ++i) {
        BigInt c = exact_div(binom(n, i) * binom(2 * n, n - 1 - i), n, "plateau_poly_213");
        out += Polynomial::monomial({n - i, 0, 0, 0}, c);
    }
    return out;
}

BigInt plateaus_213(int n, int k)
{
    require_positive(n, "plateaus_213");
    return exact_div(binom(n, k) * binom(2 * n, k - 1), n, "plateaus_213");
}

Polynomial plateau_poly_123(int n)
{
    Polynomial out;
    for (int j = 0; j <= n; ++j) {
        BigInt c = exact_div(binom(n + 1, j) * binom(2 * n - j, n + j), n + 1, "plateau_poly_123");
        out += Polynomial::monomial({n - j, 0, 0, 0}, c);
    }
    return out;
}

BigInt plateaus_123(int n, int k)
{
    return exact_div(binom(n + 1, k + 1) * binom(n + k, 2 * n - k), n + 1, "plateaus_123");
}

BigInt descents_132(int n, int d)
{
    require_positive(n, "descents_132");
    BigInt sum = 0;
    for (int j = 0; j <= n + 1; ++j) sum += binom(n + 1, j) * binom(j, d + 1 - j);
    return exact_div(binom(n - 1, d) * sum, n + 1, "descents_132");
}

namespace {

template <class Exponent>
Polynomial ascent_sum(int n, Exponent r_exponent)
{
    const Polynomial one_minus_2r = Polynomial(1) - Polynomial(2) * kR;
    Polynomial numer;
    for (int j = 0; j <= n + 1; ++j) {
        for (int i = 0; i <= j; ++i) {
            BigInt c = binom(n + 1, j) * binom(j, i) * binom(3 * n + 1 - j - i, 2 * n + 1);
            if (c == 0) continue;
            numer += Polynomial(c) * Polynomial::var(Var::r, r_exponent(j, i)) * one_minus_2r.pow(j - i);
        }
    }
    Polynomial out;
    for (const auto& [e, c] : numer.terms()) {
        out += Polynomial::monomial(e, exact_div(c, n + 1, "ascent_poly_132"));
    }
    return out;
}

}  // namespace

Polynomial ascent_poly_132(int n)
{
    require_positive(n, "ascent_poly_132");
    Polynomial out = ascent_sum(n, [n](int j, int i) { return n - j + i; });
    if (!out.is_polynomial()) {
        throw NonPolynomialResult("ascent polynomial for n=" + std::to_string(n) + " has negative powers: " + out.to_string());
    }
    return out;
}

Polynomial ascent_laurent_132_printed(int n)
{
    return ascent_sum(n, [n](int j, int) { return n - 1 - j; });
}

BigInt fibonacci(int k)
{
    BigInt a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

BigInt fibonacci_count_213_1233(int n)
{
    return fibonacci(2 * n);
}

BigInt catalan(int n)
{
    return exact_div(binom(2 * n, n), n + 1, "catalan");
}

const std::vector<std::string>& formula_ids()
{
    static const std::vector<std::string> ids = {
        "kuba-213", "kuba-123", "eq04", "eq04-poly", "eq05", "eq050",
        "thm1.3-descents", "sec2.3-ascents", "sec2.3-ascents-printed", "fibonacci",
    };
    return ids;
}

Polynomial evaluate(const std::string& id, const FormulaArgs& a)
{
    if (id == "kuba-213") return count_avoid_213(a.n);
    if (id == "kuba-123") return count_avoid_123(a.n);
    if (id == "eq04") return count_213_by_stats(a.n, a.m, a.d, a.k);
    if (id == "eq04-poly") return distribution_213(a.n);
    if (id == "eq05") return plateau_poly_213(a.n);
    if (id == "eq050") return plateau_poly_123(a.n);
    if (id == "thm1.3-descents") return descents_132(a.n, a.d);
    if (id == "sec2.3-ascents") return ascent_poly_132(a.n);
    if (id == "sec2.3-ascents-printed") return ascent_laurent_132_printed(a.n);
    if (id == "fibonacci") return fibonacci_count_213_1233(a.n);
    throw UnknownEquation("unknown formula id \"" + id + "\"");
}

}  // namespace stirperm::formulas
