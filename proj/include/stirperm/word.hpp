#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stirperm {

/// A finite sequence of positive integers (a multiset permutation when the
/// multiplicities are fixed). Letters are stored 0-indexed; positions in the
/// text formats are 1-indexed.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters);
    explicit Word(std::vector<int> letters);

    /// Digit form ("1221") or comma form ("1,2,2,1"). Throws ParseError.
    static Word parse(std::string_view text);

    const std::vector<int>& letters() const { return letters_; }
    std::span<const int> view() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    int max_letter() const;

    Word reversed() const;

    /// Digit form when every letter is <= 9, comma form otherwise.
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// A word whose value set is exactly {1, ..., m}; repeated letters allowed.
class Pattern {
public:
    explicit Pattern(Word letters);
    static Pattern parse(std::string_view text);  // throws BadPattern

    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    std::string to_string() const { return word_.to_string(); }

    /// Disjoint concatenation: this followed by other shifted above max letter.
    Pattern direct_sum(const Pattern& other) const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    Word word_;
};

struct StatVector {
    int des = 0;
    int asc = 0;
    int plat = 0;
    int order = 0;

    int ades() const { return des + 1; }
    int aasc() const { return asc + 1; }

    friend bool operator==(const StatVector&, const StatVector&) = default;
};

/// True iff w is a permutation of {1,1,...,n,n} in which every letter between
/// the two copies of v exceeds v. The empty word is Stirling of order 0.
bool is_stirling(const Word& w);

/// A validated Stirling permutation.
class StirlingPermutation {
public:
    StirlingPermutation() = default;
    explicit StirlingPermutation(Word w);  // throws ParseError when not Stirling

    const Word& word() const { return word_; }
    int order() const { return static_cast<int>(word_.size() / 2); }
    std::string to_string() const { return word_.to_string(); }

    friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;
    friend auto operator<=>(const StirlingPermutation&, const StirlingPermutation&) = default;

private:
    Word word_;
};

/// Adjacent descents, ascents and plateaus; order is size/2.
StatVector stats(const Word& w);

/// Subsequence containment: strict order and equality of letters must both
/// match the pattern.
bool contains(const Word& w, const Pattern& tau);
bool avoids_all(const Word& w, std::span<const Pattern> patterns);

std::size_t count_occurrences(const Word& w, const Pattern& tau);

/// Pairs (i, j) with i < j, w[j] == w[j+1] and w[i] < w[j]: a smaller letter
/// somewhere before a plateau.
std::size_t count_plateau_anchored_122(const Word& w);

/// Subsequence of first occurrences of each value.
Word first_occurrence_permutation(const Word& w);

bool is_permutation_of_n(const Word& w);

}  // namespace stirperm
