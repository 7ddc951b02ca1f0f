#include "stirperm/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "stirperm/bijections.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/equations.hpp"
#include "stirperm/error.hpp"
#include "stirperm/formulas.hpp"
#include "stirperm/recurrence.hpp"

namespace stirperm {

NRange NRange::parse(std::string_view text)
{
    auto read = [&](std::string_view part) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("bad order range \"" + std::string(text) + "\"; expected a..b");
        }
        return std::stoi(std::string(part));
    };
    NRange r;
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        r.lo = r.hi = read(text);
    } else {
        r.lo = read(text.substr(0, dots));
        r.hi = read(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw ParseError("empty order range \"" + std::string(text) + "\"");
    return r;
}

namespace {

struct Outcome {
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string counterexample;
};

Outcome same(const Polynomial& expected, const Polynomial& actual)
{
    Outcome o{expected == actual, expected.to_string(), actual.to_string(), {}};
    if (!o.pass) {
        const Polynomial diff = actual - expected;
        const auto& [e, c] = *diff.terms().begin();
        const std::string mono = Polynomial::monomial(e, 1).to_string();
        o.counterexample = "coefficient of " + mono + ": expected " + to_decimal(expected.coeff(e)) + ", got "
                           + to_decimal(actual.coeff(e));
    }
    return o;
}

Outcome same(const BigInt& expected, const BigInt& actual)
{
    return Outcome{expected == actual, to_decimal(expected), to_decimal(actual), {}};
}

Outcome all_of(std::vector<Outcome> parts)
{
    for (auto& p : parts) {
        if (!p.pass) return p;
    }
    return parts.empty() ? Outcome{true, {}, {}, {}} : parts.front();
}

class Recorder {
public:
    Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

    void check(const std::string& id, const std::function<Outcome()>& body)
    {
        CheckResult r;
        r.suite = suite_;
        r.id = suite_ + "." + id;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = body();
            r.pass = o.pass;
            r.expected = std::move(o.expected);
            r.actual = std::move(o.actual);
            r.counterexample = std::move(o.counterexample);
        } catch (const std::exception& e) {
            r.pass = false;
            r.actual = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out_.push_back(std::move(r));
    }

private:
    std::string suite_;
    std::vector<CheckResult>& out_;
};

std::string at(int n) { return "n=" + std::to_string(n); }

// Brute-force distributions are shared between suites within one run.
class Cache {
public:
    explicit Cache(int jobs) : jobs_(jobs) {}

    const Polynomial& dist(int n, std::initializer_list<const char*> avoid)
    {
        std::string key = std::to_string(n);
        for (const char* a : avoid) key += std::string(":") + a;
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(key, distribution(n, patterns(avoid), jobs_)).first;
        return it->second;
    }

private:
    int jobs_;
    std::map<std::string, Polynomial> memo_;
};

Polynomial plateau_marginal(const Polynomial& d)
{
    return d.specialize(Var::q, 1).specialize(Var::r, 1);
}

// sum over sigma of q^(stat), from a p^plat q^des r^asc distribution.
Polynomial marginal_in_q(const Polynomial& d, Var stat, int shift)
{
    Polynomial m = d;
    for (Var v : {Var::p, Var::q, Var::r}) {
        if (v != stat) m = m.specialize(v, 1);
    }
    if (stat != Var::q) m = m.swap(stat, Var::q);
    return m.shift(Var::q, shift);
}

// ---- suites ----

void suite_card(NRange range, Cache& cache, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("all." + at(n), [&] {
            BigInt eulerian_total = 0;
            for (const auto& c : second_order_eulerian(n)) eulerian_total += c;
            return all_of({same(double_factorial_odd(n), BigInt(generate_all(n).size())),
                           same(double_factorial_odd(n), eulerian_total)});
        });
        rec.check("213." + at(n), [&] { return same(formulas::count_avoid_213(n), cache.dist(n, {"213"}).value_at_ones()); });
        rec.check("123." + at(n), [&] { return same(formulas::count_avoid_123(n), cache.dist(n, {"123"}).value_at_ones()); });
        rec.check("132." + at(n), [&] { return same(formulas::count_avoid_123(n), cache.dist(n, {"132"}).value_at_ones()); });
    }
}

void suite_joint_213(NRange range, Cache& cache, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("joint." + at(n), [&] {
            const Polynomial& d = cache.dist(n, {"213"});
            for (int m = 0; m <= 2 * n; ++m) {
                for (int des = 0; des <= 2 * n; ++des) {
                    for (int k = 0; k <= 2 * n; ++k) {
                        const BigInt want = formulas::count_213_by_stats(n, m, des, k);
                        const BigInt got = d.coeff({k, des, m, 0});
                        if (want != got) {
                            return Outcome{false, to_decimal(want), to_decimal(got),
                                           "asc=" + std::to_string(m) + " des=" + std::to_string(des)
                                               + " plat=" + std::to_string(k)};
                        }
                    }
                }
            }
            return same(formulas::distribution_213(n), d);
        });
        rec.check("symmetry." + at(n), [&] {
            const Polynomial base = kQ * kR * cache.dist(n, {"213"});
            std::array<Var, kVarCount> perm{Var::p, Var::q, Var::r, Var::z};
            std::vector<Outcome> parts;
            do {
                parts.push_back(same(base, base.permute(perm)));
            } while (std::next_permutation(perm.begin(), perm.begin() + 3));
            return all_of(std::move(parts));
        });
        rec.check("plateaus." + at(n), [&] {
            const Polynomial marg = plateau_marginal(cache.dist(n, {"213"}));
            Polynomial by_k;
            for (int k = 0; k <= 2 * n; ++k) by_k += formulas::plateaus_213(n, k) * Polynomial::var(Var::p, k);
            return all_of({same(formulas::plateau_poly_213(n), marg), same(by_k, marg)});
        });
    }
}

void suite_123(NRange range, Cache& cache, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("plateaus." + at(n), [&] {
            const Polynomial marg = plateau_marginal(cache.dist(n, {"123"}));
            Polynomial by_k;
            for (int k = 0; k <= 2 * n; ++k) by_k += formulas::plateaus_123(n, k) * Polynomial::var(Var::p, k);
            return all_of({same(formulas::plateau_poly_123(n), marg), same(by_k, marg)});
        });
        rec.check("symmetry." + at(n), [&] {
            const Polynomial base = kQ * cache.dist(n, {"123"});
            return same(base, base.swap(Var::p, Var::q));
        });
    }
}

void suite_marginals(NRange range, Cache& cache, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("123." + at(n), [&] {
            const Polynomial& d = cache.dist(n, {"123"});
            return same(marginal_in_q(d, Var::p, 0), marginal_in_q(d, Var::q, 1));
        });
        rec.check("213." + at(n), [&] {
            const Polynomial& d = cache.dist(n, {"213"});
            const Polynomial plat = marginal_in_q(d, Var::p, 0);
            return all_of({same(plat, marginal_in_q(d, Var::q, 1)), same(plat, marginal_in_q(d, Var::r, 1))});
        });
    }
}

void suite_132(NRange range, Cache& cache, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("descents." + at(n), [&] {
            const Polynomial des = cache.dist(n, {"132"}).specialize(Var::p, 1).specialize(Var::r, 1);
            Polynomial closed;
            for (int d = 0; d <= 2 * n; ++d) closed += formulas::descents_132(n, d) * Polynomial::var(Var::q, d);
            return same(closed, des);
        });
        rec.check("plateaus." + at(n), [&] {
            return same(plateau_marginal(cache.dist(n, {"123"})), plateau_marginal(cache.dist(n, {"132"})));
        });
        rec.check("ascents." + at(n), [&] {
            const Polynomial asc = cache.dist(n, {"132"}).specialize(Var::p, 1).specialize(Var::q, 1);
            return same(formulas::ascent_poly_132(n), asc);
        });
    }
}

void suite_series(NRange range, Cache& cache, Recorder& rec)
{
    const TruncatedSeries s213 = c213(range.hi);
    const TruncatedSeries s123 = c123(range.hi);
    const TruncatedSeries s132 = c132(range.hi);
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("213." + at(n), [&] { return same(cache.dist(n, {"213"}), s213[n]); });
        rec.check("123." + at(n), [&] { return same(cache.dist(n, {"123"}), s123[n]); });
        rec.check("132." + at(n), [&] { return same(cache.dist(n, {"132"}), s132[n]); });
    }
}

// L_n(v) by enumeration: sum over avoiders starting with a plateau ii of
// weight * v^(i-1).
PolyInV brute_L(int n, const char* avoid)
{
    std::vector<Polynomial> by_first(static_cast<std::size_t>(n));
    for (const auto& sigma : generate_avoiders(n, patterns({avoid}))) {
        const Word& w = sigma.word();
        if (w[0] != w[1]) continue;
        const StatVector st = stats(w);
        by_first[static_cast<std::size_t>(w[0] - 1)] += Polynomial::monomial({st.plat, st.des, st.asc, 0}, 1);
    }
    return PolyInV(std::move(by_first));
}

void suite_recurrence(NRange range, Cache& cache, Recorder& rec)
{
    const int order = std::max(range.hi, 3);
    const RecurrenceTable t123 = recurrence_123(order);
    const RecurrenceTable t132 = recurrence_132(order);
    const TruncatedSeries s123 = c123(order);
    const TruncatedSeries s132 = c132(order);
    rec.check("seeds", [&] {
        return all_of({same(seed_L2().at_one(), brute_L(2, "123").at_one()),
                       Outcome{seed_L2() == brute_L(2, "123"), seed_L2().to_string(), brute_L(2, "123").to_string(), {}},
                       Outcome{seed_L2() == brute_L(2, "132"), seed_L2().to_string(), brute_L(2, "132").to_string(), {}},
                       Outcome{seed_L3_123() == brute_L(3, "123"), seed_L3_123().to_string(),
                               brute_L(3, "123").to_string(), {}},
                       same(seed_f2(), cache.dist(2, {"123"})), same(seed_f2(), cache.dist(2, {"132"}))});
    });
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("123." + at(n), [&] {
            const PolyInV bl = brute_L(n, "123");
            return all_of({same(s123[n], t123.f[n]),
                           Outcome{t123.L[n] == bl, bl.to_string(), t123.L[n].to_string(), {}}});
        });
        rec.check("132." + at(n), [&] {
            const PolyInV bl = brute_L(n, "132");
            return all_of({same(s132[n], t132.f[n]),
                           Outcome{t132.L[n] == bl, bl.to_string(), t132.L[n].to_string(), {}}});
        });
    }
}

TruncatedSeries integer_series(int order, std::initializer_list<long long> coeffs)
{
    std::vector<Polynomial> cs(static_cast<std::size_t>(order) + 1);
    std::size_t i = 0;
    for (long long c : coeffs) {
        if (i < cs.size()) cs[i] = Polynomial(BigInt(c));
        ++i;
    }
    return TruncatedSeries(order, std::move(cs));
}

TruncatedSeries at_ones(const TruncatedSeries& s)
{
    return s.specialize(Var::p, 1).specialize(Var::q, 1).specialize(Var::r, 1);
}

Outcome same_series(const TruncatedSeries& expected, const TruncatedSeries& actual)
{
    for (int k = 0; k <= std::min(expected.order(), actual.order()); ++k) {
        if (expected[k] != actual[k]) {
            Outcome o = same(expected[k], actual[k]);
            o.counterexample = "x^" + std::to_string(k) + " " + o.counterexample;
            return o;
        }
    }
    return Outcome{true, {}, {}, {}};
}

void suite_further(NRange range, Cache& cache, Recorder& rec)
{
    constexpr int kRationalOrder = 10;
    constexpr int kCatalanOrder = 8;
    rec.check("122.closed-form", [&] {
        TruncatedSeries want = TruncatedSeries::constant(kRationalOrder, 1);
        for (int j = 1; j <= kRationalOrder; ++j) want.set(j, Polynomial::var(Var::p, j) * Polynomial::var(Var::q, j - 1));
        return same_series(want, avoid_pair_chain(PatternChain::parse("1,11"), kRationalOrder));
    });
    const TruncatedSeries d1233 = integer_series(kRationalOrder, {1, -3, 1});
    const TruncatedSeries d12344 = integer_series(kRationalOrder, {1, -7, 15, -12, 5, -1});
    const TruncatedSeries d123455 =
        integer_series(kRationalOrder, {1, -1}) * integer_series(kRationalOrder, {1, -14, 77, -215, 332, -295, 157, -51, 10, -1});
    rec.check("1233.rational", [&] {
        const TruncatedSeries want = integer_series(kRationalOrder, {1, -1}).pow(2) / d1233;
        return same_series(want, at_ones(avoid_pair_chain(PatternChain::parse("1,1,11"), kRationalOrder)));
    });
    rec.check("12344.rational", [&] {
        return same_series(d1233.pow(2) / d12344, at_ones(avoid_pair_chain(PatternChain::parse("1,1,1,11"), kRationalOrder)));
    });
    rec.check("123455.rational", [&] {
        return same_series(d12344.pow(2) / d123455,
                           at_ones(avoid_pair_chain(PatternChain::parse("1,1,1,1,11"), kRationalOrder)));
    });
    const TruncatedSeries cat = catalan_series(kCatalanOrder);
    const TruncatedSeries x = TruncatedSeries::x(kCatalanOrder);
    rec.check("1122.catalan", [&] {
        return same_series(cat, at_ones(avoid_pair_chain(PatternChain::parse("11,11"), kCatalanOrder)));
    });
    rec.check("112233.catalan", [&] {
        return same_series(compose(cat, x * cat), at_ones(avoid_pair_chain(PatternChain::parse("11,11,11"), kCatalanOrder)));
    });
    rec.check("11223344.catalan", [&] {
        return same_series(compose(cat, x * compose(cat, x * cat)),
                           at_ones(avoid_pair_chain(PatternChain::parse("11,11,11,11"), kCatalanOrder)));
    });
    for (const char* chain : {"1,1,11", "1,1,1,11", "11,11", "11,11,11", "1,11,11", "11,1,11"}) {
        rec.check(std::string("printed-form.") + chain, [&] {
            const PatternChain c = PatternChain::parse(chain);
            return same_series(at_ones(avoid_pair_chain(c, kRationalOrder, ChainForm::exact)),
                               at_ones(avoid_pair_chain(c, kRationalOrder, ChainForm::printed)));
        });
    }
    // Chains against enumeration of the avoiders of {213, tau}.
    const std::pair<const char*, const char*> chains[] = {
        {"1,11", "122"}, {"1,1,11", "1233"}, {"11,11", "1122"}, {"11,11,11", "112233"}, {"1,11,11", "12233"}, {"11,1,11", "11233"}};
    for (const auto& [chain, tau] : chains) {
        const TruncatedSeries s = avoid_pair_chain(PatternChain::parse(chain), range.hi);
        for (int n = range.lo; n <= range.hi; ++n) {
            rec.check(std::string(tau) + "." + at(n), [&, tau = tau] { return same(cache.dist(n, {"213", tau}), s[n]); });
        }
    }
}

void suite_fibonacci(NRange range, Cache& cache, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check(at(n), [&] {
            const BigInt f = formulas::fibonacci(2 * n);
            return all_of({same(f, cache.dist(n, {"213", "1233"}).value_at_ones()),
                           same(f, formulas::fibonacci_count_213_1233(n))});
        });
    }
}

Polynomial printed_r_term(int n)
{
    auto t = [](int c, int pp, int zz) { return Polynomial::monomial({pp, 0, 0, zz}, c); };
    switch (n) {
    case 0:
        return 1;
    case 1:
        return kP;
    case 2:
        return kP * (t(1, 1, 2) + t(1, 0, 1) + t(1, 1, 0));
    case 3:
        return kP * (t(1, 2, 6) + t(2, 1, 3) + t(1, 2, 4) + t(1, 1, 4) + t(1, 0, 2) + t(1, 1, 2) + t(2, 2, 2) + t(2, 1, 1)
                     + t(1, 2, 0));
    case 4:
        return kP * (t(1, 3, 0) + t(7, 2, 3) + t(3, 1, 2) + t(2, 1, 3) + t(2, 2, 2) + t(3, 3, 4) + t(3, 3, 2) + t(3, 2, 1)
                     + t(3, 2, 4) + t(3, 3, 6) + t(4, 1, 4) + t(1, 1, 6) + t(1, 0, 3) + t(2, 2, 6) + t(4, 2, 7) + t(5, 2, 5)
                     + t(1, 3, 10) + t(2, 3, 8) + t(1, 2, 8) + t(2, 1, 5) + t(1, 2, 9) + t(1, 3, 12));
    default:
        throw std::out_of_range("printed R terms stop at x^4");
    }
}

void suite_r(NRange range, Recorder& rec)
{
    const TruncatedSeries r = solve_r(std::max(range.hi, 4));
    rec.check("printed-terms", [&] {
        std::vector<Outcome> parts;
        for (int n = 0; n <= 4; ++n) parts.push_back(same(printed_r_term(n), r[n]));
        return all_of(std::move(parts));
    });
    const auto avoid = patterns({"213"});
    const Pattern p122 = Pattern::parse("122");
    for (int n = range.lo; n <= range.hi; ++n) {
        rec.check("subsequence." + at(n), [&] {
            Outcome o = same(joint_plat_122(n, avoid, OccurrenceKind::subsequence), r[n]);
            if (!o.pass) {
                for (const auto& sigma : generate_avoiders(n, avoid)) {
                    const auto sub = count_occurrences(sigma.word(), p122);
                    const auto anchored = count_plateau_anchored_122(sigma.word());
                    if (sub != anchored) {
                        o.counterexample = sigma.to_string() + " has " + std::to_string(sub)
                                           + " occurrences of 122 but the equation counts " + std::to_string(anchored);
                        break;
                    }
                }
            }
            return o;
        });
        rec.check("plateau-anchored." + at(n), [&] {
            return same(joint_plat_122(n, avoid, OccurrenceKind::plateau_anchored), r[n]);
        });
    }
}

void suite_bijections(NRange range, Recorder& rec)
{
    for (int n = range.lo; n <= range.hi; ++n) {
        for (const auto& map : bijection_names()) {
            rec.check(map + "." + at(n), [&] {
                const BijectionReport r = verify_bijection(map, n);
                const bool ok = r.failures == 0 && r.statistic_transport;
                return Outcome{ok, "0 failures, transport holds",
                               std::to_string(r.failures) + " failures of " + std::to_string(r.checked)
                                   + (r.statistic_transport ? ", transport holds" : ", transport broken"),
                               r.first_failure};
            });
        }
        rec.check("tree-symmetry." + at(n), [&] {
            using S = TernaryTree::Slot;
            std::array<S, 3> image{S::left, S::vertical, S::right};
            const auto avoid = patterns({"213"});
            do {
                for (const auto& sigma : generate_avoiders(n, avoid)) {
                    const StatVector st = stats(sigma.word());
                    const std::array<int, 3> before{st.aasc(), st.plat, st.ades()};
                    const StirlingPermutation back = phi_inverse(phi(sigma).permute_slots(image));
                    const StatVector sb = stats(back.word());
                    const std::array<int, 3> after{sb.aasc(), sb.plat, sb.ades()};
                    for (int i = 0; i < 3; ++i) {
                        if (after[image[i]] != before[i]) {
                            return Outcome{false, "statistics permuted with the edge types", "mismatch",
                                           sigma.to_string() + " -> " + back.to_string()};
                        }
                    }
                }
            } while (std::next_permutation(image.begin(), image.end()));
            return Outcome{true, {}, {}, {}};
        });
    }
}

using SuiteFn = std::function<void(NRange, Cache&, Recorder&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"card", suite_card},
        {"thm1.1", suite_joint_213},
        {"thm1.2", suite_123},
        {"corollary", suite_marginals},
        {"thm1.3", suite_132},
        {"series", suite_series},
        {"recurrence", suite_recurrence},
        {"further", suite_further},
        {"fibonacci", suite_fibonacci},
        {"R", [](NRange r, Cache&, Recorder& rec) { suite_r(r, rec); }},
        {"bijections", [](NRange r, Cache&, Recorder& rec) { suite_bijections(r, rec); }},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, NRange range, int jobs)
{
    if (range.lo < 1) throw std::invalid_argument("verification orders start at 1");
    std::vector<CheckResult> out;
    Cache cache(jobs);
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        Recorder rec(name, out);
        fn(range, cache, rec);
    }
    if (!found) throw std::invalid_argument("unknown suite \"" + suite + "\"");
    return out;
}

}  // namespace stirperm
