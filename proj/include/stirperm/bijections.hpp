#pragma once

#include <string>
#include <vector>

#include "stirperm/trees.hpp"
#include "stirperm/word.hpp"

namespace stirperm {

/// Gaps between successive left-to-right minimum positions of p, with a
/// sentinel 0 appended after the last entry.
struct Composition {
    std::vector<int> parts;
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// A permutation together with a choice 1 <= s[i] <= c[i] for each part of
/// its composition.
struct APair {
    Word perm;
    std::vector<int> s;

    std::string to_string() const;  // "perm;s1,s2,..."
    static APair parse(std::string_view text);
    friend bool operator==(const APair&, const APair&) = default;
    friend auto operator<=>(const APair&, const APair&) = default;
};

Composition composition_of(const Word& perm);

/// Splits a valid pair into left-to-right minimum segments of perm.
std::vector<std::vector<int>> lr_min_segments(const Word& perm);

TernaryTree phi(const StirlingPermutation& sigma);  // throws NotAvoider
StirlingPermutation phi_inverse(const TernaryTree& t);

APair psi(const StirlingPermutation& sigma);
/// Inverse on pairs whose perm avoids 123. Throws InvalidPair.
StirlingPermutation psi_inverse_123(const APair& a);
/// Inverse on pairs whose perm avoids 132. Throws InvalidPair.
StirlingPermutation psi_inverse_132(const APair& a);

APair involution_A(const APair& a);  // throws InvalidPair

/// All pairs over perms of [n] avoiding `base` (a length-3 pattern).
std::vector<APair> all_pairs(int n, const Pattern& base);

OrderedTree rho(const Word& perm);  // throws NotAvoider
Word rho_inverse(const OrderedTree& t);

FCOrderedTree to_fc_tree(const APair& a);  // throws InvalidPair / NotAvoider
APair fc_to_pair(const FCOrderedTree& t);
FCOrderedTree fc_involution(const FCOrderedTree& t);

/// Exhaustive round-trip and statistic-transport check of one map at order n.
struct BijectionReport {
    std::string map;
    int n = 0;
    long long checked = 0;
    long long failures = 0;
    bool statistic_transport = true;
    std::string first_failure;
};

/// Map names: phi, psi (123 restriction), psi132, rho, fc. Throws
/// std::invalid_argument for other names.
BijectionReport verify_bijection(const std::string& map, int n);
std::vector<std::string> bijection_names();

}  // namespace stirperm
