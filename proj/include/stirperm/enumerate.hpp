#pragma once

#include <span>
#include <utility>
#include <vector>

#include "stirperm/bigint.hpp"
#include "stirperm/polynomial.hpp"
#include "stirperm/word.hpp"

namespace stirperm {

namespace detail {

// Insert the pair (v, v) into every gap of the current word, gaps counted
// from the right end, and recurse on v + 1.
template <class Visit>
void insert_pairs(std::vector<int>& buf, int v, int n, Visit& visit)
{
    if (v > n) {
        visit(static_cast<const std::vector<int>&>(buf));
        return;
    }
    const std::size_t len = buf.size();
    for (std::size_t gap = 0; gap <= len; ++gap) {
        const std::size_t pos = len - gap;
        buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(pos), 2, v);
        insert_pairs(buf, v + 1, n, visit);
        buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(pos), buf.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    }
}

}  // namespace detail

/// Visit every element of Q_n exactly once, as a letter vector, in canonical
/// order: lexicographic in the insertion gaps (counted from the right) chosen
/// for 2, 3, ..., n. For n = 2 the order is 1122, 1221, 2211.
template <class Visit>
void for_each_stirling(int n, Visit&& visit)
{
    std::vector<int> buf;
    buf.reserve(2 * static_cast<std::size_t>(n));
    if (n == 0) {
        visit(static_cast<const std::vector<int>&>(buf));
        return;
    }
    buf = {1, 1};
    detail::insert_pairs(buf, 2, n, visit);
}

std::vector<StirlingPermutation> generate_all(int n);
std::vector<StirlingPermutation> generate_avoiders(int n, std::span<const Pattern> patterns);

/// Sum of p^plat q^des r^asc over the avoiders of order n. The enumeration is
/// split over `jobs` threads; the result does not depend on jobs.
Polynomial distribution(int n, std::span<const Pattern> patterns, int jobs = 1);

/// C(n, k) for k = 1..n: the number of elements of Q_n with des + 1 = k.
std::vector<BigInt> second_order_eulerian(int n);

enum class OccurrenceKind {
    subsequence,       // count_occurrences(w, 122)
    plateau_anchored,  // count_plateau_anchored_122(w)
};

/// Sum of p^plat z^occ over the avoiders of order n.
Polynomial joint_plat_122(int n, std::span<const Pattern> patterns, OccurrenceKind kind = OccurrenceKind::subsequence);

/// Convenience: a single-pattern list from text, e.g. patterns({"213", "1233"}).
std::vector<Pattern> patterns(std::initializer_list<const char*> texts);

}  // namespace stirperm
