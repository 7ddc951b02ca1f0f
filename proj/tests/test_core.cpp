#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stirperm/bigint.hpp"
#include "stirperm/error.hpp"
#include "stirperm/word.hpp"

using namespace stirperm;

namespace {

Word w(const char* s) { return Word::parse(s); }
Pattern pat(const char* s) { return Pattern::parse(s); }

}  // namespace

TEST_CASE("word parsing accepts digit and comma forms")
{
    CHECK(w("1221").letters() == std::vector<int>{1, 2, 2, 1});
    CHECK(w("1,10,10,1").letters() == std::vector<int>{1, 10, 10, 1});
    CHECK(w("1,10,10,1").to_string() == "1,10,10,1");
    CHECK(w("1221").to_string() == "1221");
    CHECK_THROWS_AS(w("12a1"), ParseError);
    CHECK_THROWS_AS(w("1201"), ParseError);
    CHECK_THROWS_AS(w("1,,2"), ParseError);
}

TEST_CASE("patterns must use a contiguous value set")
{
    CHECK(pat("122").size() == 3);
    CHECK_THROWS_AS(pat("13"), BadPattern);
    CHECK_THROWS_AS(pat("22"), BadPattern);
    CHECK(pat("11").direct_sum(pat("121")).to_string() == "11232");
    CHECK(pat("1").direct_sum(pat("11")).to_string() == "122");
}

TEST_CASE("is_stirling on hand-checked words")
{
    CHECK(is_stirling(w("1221")));
    CHECK_FALSE(is_stirling(w("1212")));
    CHECK(is_stirling(w("122133")));
    CHECK(is_stirling(Word{}));
    CHECK(is_stirling(w("11")));
    CHECK_FALSE(is_stirling(w("1")));
    CHECK_FALSE(is_stirling(w("2112")));
    CHECK_FALSE(is_stirling(w("2233")));
    CHECK_FALSE(is_stirling(w("111122")));
    CHECK_THROWS_AS(StirlingPermutation(w("1212")), ParseError);
}

TEST_CASE("is_stirling agrees with the definition on all multiset words")
{
    for (int n = 0; n <= 6; ++n) {
        long long accepted = 0;
        for (const auto& letters : oracle::multiset_permutations(n)) {
            const bool mine = is_stirling(Word(letters));
            CHECK(mine == oracle::stirling(letters));
            accepted += mine;
        }
        CHECK(BigInt(accepted) == double_factorial_odd(static_cast<unsigned>(n)));
    }
}

TEST_CASE("adjacent statistics")
{
    CHECK(stats(w("1122")) == StatVector{0, 1, 2, 2});
    CHECK(stats(w("1221")) == StatVector{1, 1, 1, 2});
    CHECK(stats(w("2211")) == StatVector{1, 0, 2, 2});
    CHECK(stats(w("1221")).ades() == 2);
    CHECK(stats(w("1122")).aasc() == 2);
}

TEST_CASE("statistics sum to 2n-1 and reversal swaps descents and ascents")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& letters : oracle::stirling_words(n)) {
            const Word word(letters);
            const StatVector s = stats(word);
            CHECK(s.des + s.asc + s.plat == 2 * n - 1);
            const StatVector r = stats(word.reversed());
            CHECK(r.des == s.asc);
            CHECK(r.asc == s.des);
            CHECK(r.plat == s.plat);
            const oracle::Stats o = oracle::stats(letters);
            CHECK(s.des == o.des);
            CHECK(s.asc == o.asc);
            CHECK(s.plat == o.plat);
        }
    }
}

TEST_CASE("containment examples")
{
    CHECK_FALSE(contains(w("1221"), pat("132")));
    CHECK(contains(w("1122"), pat("1122")));
    CHECK_FALSE(contains(w("1221"), pat("1122")));
    CHECK_FALSE(contains(w("2211"), pat("1122")));
    CHECK(contains(w("1221"), pat("122")));
    CHECK(contains(w("112233"), pat("123")));
    CHECK_FALSE(contains(w("1"), pat("11")));
}

TEST_CASE("occurrence counting examples")
{
    CHECK(count_occurrences(w("1122"), pat("122")) == 2);
    CHECK(count_occurrences(w("1221"), pat("122")) == 1);
    CHECK(count_occurrences(w("2211"), pat("122")) == 0);
    CHECK(count_plateau_anchored_122(w("1122")) == 2);
    CHECK(count_plateau_anchored_122(w("1221")) == 1);
    CHECK(count_plateau_anchored_122(w("2211")) == 0);
}

TEST_CASE("containment and counting agree with the subset oracle")
{
    const std::vector<const char*> taus = {"1", "11", "12", "21", "122", "213", "123", "132",
                                           "1122", "1233", "2211", "1212", "11223"};
    for (int n = 1; n <= 4; ++n) {
        for (const auto& letters : oracle::stirling_words(n)) {
            const Word word(letters);
            for (const char* t : taus) {
                const auto expected = oracle::occurrences(letters, oracle::digits(t));
                CHECK(count_occurrences(word, pat(t)) == expected);
                CHECK(contains(word, pat(t)) == (expected > 0));
            }
        }
    }
}

TEST_CASE("containment on random words matches the oracle")
{
    std::mt19937 rng(20260116);
    std::uniform_int_distribution<int> letter(1, 4), len(0, 9);
    const std::vector<const char*> taus = {"12", "112", "121", "213", "1123", "2121"};
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<int> letters(static_cast<std::size_t>(len(rng)));
        for (int& x : letters) x = letter(rng);
        const Word word(letters);
        for (const char* t : taus) {
            CHECK(count_occurrences(word, pat(t)) == oracle::occurrences(letters, oracle::digits(t)));
        }
    }
}

TEST_CASE("plateau-anchored count follows its definition")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& letters : oracle::stirling_words(n)) {
            std::size_t expected = 0;
            for (std::size_t j = 0; j + 1 < letters.size(); ++j) {
                if (letters[j] != letters[j + 1]) continue;
                for (std::size_t i = 0; i < j; ++i) expected += letters[i] < letters[j];
            }
            CHECK(count_plateau_anchored_122(Word(letters)) == expected);
        }
    }
}

TEST_CASE("first occurrences form a permutation")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& letters : oracle::stirling_words(n)) {
            const Word first = first_occurrence_permutation(Word(letters));
            CHECK(is_permutation_of_n(first));
            CHECK(static_cast<int>(first.size()) == n);
        }
    }
}

TEST_CASE("first occurrence permutation examples")
{
    CHECK(first_occurrence_permutation(w("1221")) == w("12"));
    CHECK(first_occurrence_permutation(w("2211")) == w("21"));
    CHECK(first_occurrence_permutation(w("122133")) == w("123"));
    CHECK(is_permutation_of_n(w("312")));
    CHECK_FALSE(is_permutation_of_n(w("313")));
}
