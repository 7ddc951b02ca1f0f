#pragma once

#include <string>
#include <vector>

#include "stirperm/bigint.hpp"
#include "stirperm/polynomial.hpp"

namespace stirperm::formulas {

/// binom(3n, n) / (2n + 1): Stirling permutations avoiding 213.
BigInt count_avoid_213(int n);

/// sum_j binom(n, j) binom(n + j - 1, n - j) / (n + 1 - j): avoiding 123 (and 132).
BigInt count_avoid_123(int n);

/// Avoiders of 213 with exactly m ascents, d descents and k plateaus:
/// binom(n, m+1) binom(n, d+1) binom(n, k) / n when m + d + k = 2n - 1.
BigInt count_213_by_stats(int n, int m, int d, int k);

/// The full p^plat q^des r^asc polynomial assembled from count_213_by_stats.
Polynomial distribution_213(int n);

/// (1/n) sum_i binom(n, i) binom(2n, n-1-i) p^(n-i).
Polynomial plateau_poly_213(int n);

/// Coefficient form of plateau_poly_213: binom(n, k) binom(2n, k-1) / n.
BigInt plateaus_213(int n, int k);

/// (1/(n+1)) sum_j binom(n+1, j) binom(2n-j, n+j) p^(n-j).
Polynomial plateau_poly_123(int n);

/// Coefficient form of plateau_poly_123: binom(n+1, k+1) binom(n+k, 2n-k) / (n+1).
BigInt plateaus_123(int n, int k);

/// 132-avoiders with exactly d descents:
/// binom(n-1, d)/(n+1) * sum_j binom(n+1, j) binom(j, d+1-j).
BigInt descents_132(int n, int d);

/// Ascent polynomial (in r) of the 132-avoiders of order n,
/// (1/(n+1)) sum_{j,i} binom(n+1,j) binom(j,i) binom(3n+1-j-i, 2n+1) r^(n-j+i) (1-2r)^(j-i).
/// Expanded as a Laurent polynomial; throws NonPolynomialResult if a negative
/// power of r survives.
Polynomial ascent_poly_132(int n);

/// The same double sum with the r-exponent n-1-j as printed in the source
/// derivation, returned as a Laurent polynomial (no polynomiality check).
Polynomial ascent_laurent_132_printed(int n);

/// F_{2n} with F_0 = 0, F_1 = 1: avoiders of both 213 and 1233.
BigInt fibonacci_count_213_1233(int n);

BigInt fibonacci(int k);

/// Catalan number binom(2n, n) / (n + 1).
BigInt catalan(int n);

/// Stable identifiers accepted by evaluate().
const std::vector<std::string>& formula_ids();

struct FormulaArgs {
    int n = 0;
    int m = 0;  // ascents (eq04)
    int d = 0;  // descents (eq04, thm1.3-descents)
    int k = 0;  // plateaus (eq04)
};

/// Evaluate a formula by identifier. Scalar formulas return a constant
/// polynomial. Throws UnknownEquation for an unknown id.
Polynomial evaluate(const std::string& id, const FormulaArgs& args);

}  // namespace stirperm::formulas
