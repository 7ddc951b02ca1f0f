#include "stirperm/enumerate.hpp"

#include <algorithm>
#include <thread>

namespace stirperm {

std::vector<StirlingPermutation> generate_all(int n)
{
    return generate_avoiders(n, {});
}

std::vector<StirlingPermutation> generate_avoiders(int n, std::span<const Pattern> patterns)
{
    std::vector<StirlingPermutation> out;
    for_each_stirling(n, [&](const std::vector<int>& letters) {
        Word w(letters);
        if (avoids_all(w, patterns)) out.emplace_back(std::move(w));
    });
    return out;
}

namespace {

Exponents stat_exponents(const StatVector& sv)
{
    return {sv.plat, sv.des, sv.asc, 0};
}

// Accumulate counts per exponent vector; jobs threads each take every
// jobs-th subtree below the insertion of 2 and 3.
template <class Key>
Polynomial tally(int n, std::span<const Pattern> patterns, int jobs, Key key)
{
    if (n < 3 || jobs <= 1) {
        Polynomial::TermMap counts;
        for_each_stirling(n, [&](const std::vector<int>& letters) {
            Word w(letters);
            if (avoids_all(w, patterns)) counts[key(w)] += 1;
        });
        Polynomial out;
        for (const auto& [e, c] : counts) out += Polynomial::monomial(e, c);
        return out;
    }

    std::vector<std::vector<int>> prefixes;
    for_each_stirling(3, [&](const std::vector<int>& letters) { prefixes.push_back(letters); });
    const int workers = std::min<int>(jobs, static_cast<int>(prefixes.size()));
    std::vector<Polynomial::TermMap> partial(workers);
    {
        std::vector<std::jthread> threads;
        for (int t = 0; t < workers; ++t) {
            threads.emplace_back([&, t] {
                for (std::size_t i = t; i < prefixes.size(); i += workers) {
                    std::vector<int> buf = prefixes[i];
                    auto visit = [&](const std::vector<int>& letters) {
                        Word w(letters);
                        if (avoids_all(w, patterns)) partial[t][key(w)] += 1;
                    };
                    detail::insert_pairs(buf, 4, n, visit);
                }
            });
        }
    }
    Polynomial out;
    for (const auto& counts : partial) {
        for (const auto& [e, c] : counts) out += Polynomial::monomial(e, c);
    }
    return out;
}

}  // namespace

Polynomial distribution(int n, std::span<const Pattern> patterns, int jobs)
{
    return tally(n, patterns, jobs, [](const Word& w) { return stat_exponents(stats(w)); });
}

std::vector<BigInt> second_order_eulerian(int n)
{
    std::vector<BigInt> row(n, 0);
    for_each_stirling(n, [&](const std::vector<int>& letters) {
        row[stats(Word(letters)).des] += 1;
    });
    return row;
}

Polynomial joint_plat_122(int n, std::span<const Pattern> patterns, OccurrenceKind kind)
{
    static const Pattern p122 = Pattern::parse("122");
    return tally(n, patterns, 1, [kind](const Word& w) {
        const auto occ = kind == OccurrenceKind::subsequence ? count_occurrences(w, p122)
                                                             : count_plateau_anchored_122(w);
        return Exponents{stats(w).plat, 0, 0, static_cast<int>(occ)};
    });
}

std::vector<Pattern> patterns(std::initializer_list<const char*> texts)
{
    std::vector<Pattern> out;
    for (const char* t : texts) out.push_back(Pattern::parse(t));
    return out;
}

}  // namespace stirperm
