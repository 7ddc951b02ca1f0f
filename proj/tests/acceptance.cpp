// One line per acceptance criterion. Every comparison is exact; the only
// tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "stirperm/bigint.hpp"
#include "stirperm/bijections.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/equations.hpp"
#include "stirperm/formulas.hpp"
#include "stirperm/recurrence.hpp"
#include "stirperm/verify.hpp"

using namespace stirperm;

namespace {

constexpr double kCardinalityBudgetSeconds = 30.0;
constexpr double kFullVerifyBudgetSeconds = 60.0;

struct Part {
    std::string name;
    bool pass;
    std::string detail;
};

struct Outcome {
    std::vector<Part> parts;
    std::vector<std::string> notes;
    double budget = 0.0;  // seconds; 0 means untimed

    void add(std::string name, bool pass, std::string detail = "")
    {
        parts.push_back({std::move(name), pass, std::move(detail)});
    }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome cardinalities()
{
    Outcome o;
    o.budget = kCardinalityBudgetSeconds;
    for (int n = 0; n <= 7; ++n) {
        BigInt count = 0;
        for_each_stirling(n, [&](const std::vector<int>&) { ++count; });
        o.add("all." + std::to_string(n), count == double_factorial_odd(static_cast<unsigned>(n)), count.str());
    }
    for (int n = 0; n <= 6; ++n) {
        const auto a = generate_avoiders(n, patterns({"213"})).size();
        const auto b = generate_avoiders(n, patterns({"123"})).size();
        const auto c = generate_avoiders(n, patterns({"132"})).size();
        o.add("213." + std::to_string(n), formulas::count_avoid_213(n) == a, std::to_string(a));
        o.add("123." + std::to_string(n), formulas::count_avoid_123(n) == b, std::to_string(b));
        o.add("132." + std::to_string(n), formulas::count_avoid_123(n) == c, std::to_string(c));
    }
    return o;
}

Outcome joint_213()
{
    Outcome o;
    const std::array<std::array<Var, kVarCount>, 6> perms = {{
        {Var::p, Var::q, Var::r, Var::z},
        {Var::p, Var::r, Var::q, Var::z},
        {Var::q, Var::p, Var::r, Var::z},
        {Var::q, Var::r, Var::p, Var::z},
        {Var::r, Var::p, Var::q, Var::z},
        {Var::r, Var::q, Var::p, Var::z},
    }};
    for (int n = 1; n <= 5; ++n) {
        const Polynomial brute = distribution(n, patterns({"213"}));
        bool all = true;
        for (int m = 0; m < 2 * n; ++m) {
            for (int d = 0; d < 2 * n; ++d) {
                for (int k = 0; k < 2 * n; ++k) {
                    all = all && brute.coeff({k, d, m, 0}) == formulas::count_213_by_stats(n, m, d, k);
                }
            }
        }
        o.add("joint." + std::to_string(n), all);
        const Polynomial f = kQ * kR * brute;
        bool sym = true;
        for (const auto& image : perms) sym = sym && f.permute(image) == f;
        o.add("symmetry." + std::to_string(n), sym);
    }
    return o;
}

Outcome plateaus_and_symmetry_123()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const Polynomial brute = distribution(n, patterns({"123"}));
        const Polynomial plat = brute.specialize(Var::q, 1).specialize(Var::r, 1);
        o.add("plateaus." + std::to_string(n), plat == formulas::plateau_poly_123(n), plat.to_string());
        const Polynomial f = kQ * brute;
        o.add("symmetry." + std::to_string(n), f.swap(Var::p, Var::q) == f);
    }
    return o;
}

// Marginal of one statistic as a polynomial in z, times z^shift.
Polynomial marginal(const Polynomial& f, Var keep, int shift)
{
    Polynomial g = f;
    for (Var v : {Var::p, Var::q, Var::r}) {
        if (v != keep) g = g.specialize(v, 1);
    }
    return g.swap(keep, Var::z).shift(Var::z, shift);
}

Outcome coinciding_marginals()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const Polynomial a = distribution(n, patterns({"213"}));
        const Polynomial plat = marginal(a, Var::p, 0);
        o.add("213." + std::to_string(n), plat == marginal(a, Var::q, 1) && plat == marginal(a, Var::r, 1));
        const Polynomial b = distribution(n, patterns({"123"}));
        o.add("123." + std::to_string(n), marginal(b, Var::p, 0) == marginal(b, Var::q, 1));
    }
    return o;
}

Outcome descents_and_plateaus_132()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const Polynomial d = distribution(n, patterns({"132"})).specialize(Var::p, 1).specialize(Var::r, 1);
        bool all = true;
        for (int k = 0; k < 2 * n; ++k) all = all && d.coeff({0, k, 0, 0}) == formulas::descents_132(n, k);
        o.add("descents." + std::to_string(n), all);
    }
    for (int n = 1; n <= 6; ++n) {
        const auto plat = [n](const char* tau) {
            return distribution(n, patterns({tau})).specialize(Var::q, 1).specialize(Var::r, 1);
        };
        o.add("plateaus." + std::to_string(n), plat("132") == plat("123"));
    }
    return o;
}

Outcome series_engine()
{
    Outcome o;
    const int order = 6;
    const TruncatedSeries a = c213(order), b = c123(order), c = c132(order);
    const RecurrenceTable r123 = recurrence_123(order), r132 = recurrence_132(order);
    for (int n = 1; n <= order; ++n) {
        const std::string tag = std::to_string(n);
        o.add("213." + tag, a[n] == distribution(n, patterns({"213"})));
        o.add("123." + tag, b[n] == distribution(n, patterns({"123"})));
        o.add("132." + tag, c[n] == distribution(n, patterns({"132"})));
        o.add("recurrence123." + tag, r123.f[n] == b[n]);
        o.add("recurrence132." + tag, r132.f[n] == c[n]);
    }
    const Polynomial p = kP, q = kQ, r = kR;
    o.add("seed.L2", seed_L2() == PolyInV({p * p * r, p * p * q}) && r132.L[2] == seed_L2());
    o.add("seed.L3", seed_L3_123() == PolyInV({p.pow(3) * q * r, p * p * q * r * (2 * p + q),
                                               p * p * q * (p * r + q * r + p * q)}) &&
                         r123.L[3] == seed_L3_123());
    o.add("seed.f2", seed_f2() == p * (p * q + p * r + q * r) && r123.f[2] == seed_f2());
    o.add("seed.g2", r132.f[2] == p * (p * r + q * r + p * q));
    return o;
}

std::vector<BigInt> rational(std::vector<BigInt> num, const std::vector<BigInt>& den, int order)
{
    num.resize(static_cast<std::size_t>(order) + 1, 0);
    std::vector<BigInt> out(num.size(), 0);
    for (std::size_t n = 0; n < out.size(); ++n) {
        BigInt c = num[n];
        for (std::size_t k = 1; k <= n && k < den.size(); ++k) c -= den[k] * out[n - k];
        out[n] = c;
    }
    return out;
}

std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<BigInt> ones(const TruncatedSeries& s)
{
    std::vector<BigInt> out;
    for (const auto& c : s.coefficients()) out.push_back(c.value_at_ones());
    return out;
}

Outcome further()
{
    Outcome o;
    const TruncatedSeries f122 = solve_equation("prepend1:1,11", 10);
    bool ok = f122[0] == Polynomial(1);
    for (int j = 1; j <= 10; ++j) {
        ok = ok && f122[j] == kP.pow(static_cast<unsigned>(j)) * kQ.pow(static_cast<unsigned>(j - 1));
    }
    o.add("F122.closed-form", ok);

    const std::vector<BigInt> d1233 = {1, -3, 1}, d12344 = {1, -7, 15, -12, 5, -1};
    const std::vector<BigInt> d123455 = mul({1, -1}, {1, -14, 77, -215, 332, -295, 157, -51, 10, -1});
    o.add("F1233.rational", ones(solve_equation("prepend1:1,1,11", 10)) == rational(mul({1, -1}, {1, -1}), d1233, 10));
    o.add("F12344.rational", ones(solve_equation("prepend1:1,1,1,11", 10)) == rational(mul(d1233, d1233), d12344, 10));
    o.add("F123455.rational",
          ones(solve_equation("prepend1:1,1,1,1,11", 10)) == rational(mul(d12344, d12344), d123455, 10));

    for (int n = 1; n <= 6; ++n) {
        const auto c = generate_avoiders(n, patterns({"213", "1233"})).size();
        o.add("fibonacci." + std::to_string(n), formulas::fibonacci(2 * n) == c, std::to_string(c));
    }

    const TruncatedSeries cat = catalan_series(8), x = TruncatedSeries::x(8);
    o.add("F1122.catalan", ones(solve_equation("prepend11:11,11", 8)) == ones(cat));
    o.add("F112233.catalan", ones(solve_equation("prepend11:11,11,11", 8)) == ones(compose(cat, x * cat)));
    o.add("F11223344.catalan",
          ones(solve_equation("prepend11:11,11,11,11", 8)) == ones(compose(cat, x * compose(cat, x * cat))));

    bool anchored = true;
    for (const auto& row : run_suite("R", {1, 5})) {
        if (row.id.find("plateau-anchored") != std::string::npos) {
            anchored = anchored && row.pass;
            continue;
        }
        o.add(row.id, row.pass, row.pass ? "" : row.counterexample);
    }
    o.notes.push_back(std::string("R against pairs (smaller letter, later plateau) for n <= 5: ") +
                      (anchored ? "match" : "mismatch"));
    return o;
}

Outcome bijections()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& map : bijection_names()) {
            const BijectionReport r = verify_bijection(map, n);
            o.add(map + "." + std::to_string(n), r.failures == 0 && r.statistic_transport, r.first_failure);
        }
        bool invol = true;
        for (const auto& a : all_pairs(n, Pattern::parse("123"))) invol = invol && involution_A(involution_A(a)) == a;
        o.add("involution." + std::to_string(n), invol);
    }
    return o;
}

Outcome full_verify()
{
    Outcome o;
    o.budget = kFullVerifyBudgetSeconds;
    const auto rows = run_suite("all", {1, 5});
    int failed = 0;
    for (const auto& row : rows) failed += !row.pass;
    o.add("completes", true);
    o.notes.push_back(std::to_string(rows.size()) + " checks, " + std::to_string(failed) + " failing");
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "cardinalities", cardinalities},
        {2, "213 joint distribution and symmetry", joint_213},
        {3, "123 plateaus and p<->q symmetry", plateaus_and_symmetry_123},
        {4, "coinciding marginals", coinciding_marginals},
        {5, "132 descents and plateaus", descents_and_plateaus_132},
        {6, "series engine and recurrences", series_engine},
        {7, "further patterns and the R series", further},
        {8, "bijections", bijections},
        {9, "full verification runtime", full_verify},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        const Outcome o = c.run();
        const double seconds = since(t0);
        bool pass = !o.parts.empty();
        for (const auto& p : o.parts) pass = pass && p.pass;
        const bool in_time = o.budget <= 0.0 || seconds < o.budget;
        pass = pass && in_time;
        failed += !pass;
        std::printf("%s  AC%d %s (%zu parts, %.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.parts.size(), seconds,
                    o.budget > 0.0 ? (in_time ? ", within budget" : ", over budget") : "");
        for (const auto& p : o.parts) {
            if (!p.pass) std::printf("      failed %s: %s\n", p.name.c_str(), p.detail.c_str());
        }
        for (const auto& note : o.notes) std::printf("      note: %s\n", note.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
