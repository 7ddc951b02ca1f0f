#include "stirperm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stirperm/bijections.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/equations.hpp"
#include "stirperm/error.hpp"
#include "stirperm/formulas.hpp"
#include "stirperm/json_io.hpp"
#include "stirperm/verify.hpp"

namespace stirperm {

namespace {

struct Options {
    int jobs = 1;

    int n = -1;
    std::vector<std::string> avoid;
    bool stats = false;
    std::string format;
    bool force = false;

    std::string formula_id;
    int m = 0;
    int d = 0;
    int k = 0;
    bool list = false;

    std::string eq;
    int order = 10;
    std::string spec;

    std::string map;
    std::string direction = "fwd";
    std::string input;
    std::string verify_map;

    std::string suite = "all";
    std::string range = "1..5";
};

int effective_jobs(int flag)
{
    if (const char* env = std::getenv("STIRPERM_JOBS"); env && *env) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("STIRPERM_JOBS must be a positive integer, got \"") + env + "\"");
    }
    return std::max(flag, 1);
}

void require_order(const Options& o, const char* verb)
{
    if (o.n < 0) throw ParseError(std::string(verb) + " needs --n");
    if (o.n > kDefaultOrderLimit && !o.force) {
        throw LimitExceeded("order " + std::to_string(o.n) + " exceeds the limit of " + std::to_string(kDefaultOrderLimit)
                            + " ((2n-1)!! = " + to_decimal(double_factorial_odd(o.n))
                            + " permutations before filtering); pass --force to run it anyway");
    }
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& texts)
{
    std::vector<Pattern> out;
    for (const auto& t : texts) out.push_back(Pattern::parse(t));
    return out;
}

std::string choose_format(const std::string& given, const std::string& fallback, std::initializer_list<const char*> allowed)
{
    const std::string f = given.empty() ? fallback : given;
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw ParseError("unsupported --format \"" + f + "\" here; expected one of " + list);
}

void cmd_enumerate(const Options& o, std::ostream& out)
{
    require_order(o, "enumerate");
    const auto pats = parse_patterns(o.avoid);
    const std::string fmt = choose_format(o.format, o.stats ? "csv" : "lines", {"lines", "json", "csv"});
    Json arr = Json::array();
    if (fmt == "csv") out << "word,des,asc,plat\n";
    for_each_stirling(o.n, [&](const std::vector<int>& letters) {
        const Word w(letters);
        if (!avoids_all(w, pats)) return;
        const StatVector st = stats(w);
        const std::string text = w.to_string();
        if (fmt == "lines") {
            out << text;
            if (o.stats) out << ' ' << st.des << ' ' << st.asc << ' ' << st.plat;
            out << '\n';
        } else if (fmt == "csv") {
            // Comma-form words are quoted so the row stays four columns.
            const bool quote = text.find(',') != std::string::npos;
            out << (quote ? "\"" + text + "\"" : text) << ',' << st.des << ',' << st.asc << ',' << st.plat << '\n';
        } else if (o.stats) {
            Json row = Json::object();
            row["word"] = text;
            row["des"] = st.des;
            row["asc"] = st.asc;
            row["plat"] = st.plat;
            arr.push_back(std::move(row));
        } else {
            arr.push_back(text);
        }
    });
    if (fmt == "json") out << arr.dump() << '\n';
}

const std::vector<Var> kPQR{Var::p, Var::q, Var::r};

void cmd_distribution(const Options& o, std::ostream& out)
{
    require_order(o, "distribution");
    const Polynomial d = distribution(o.n, parse_patterns(o.avoid), o.jobs);
    if (choose_format(o.format, "lines", {"lines", "json"}) == "json") out << to_json(d, kPQR).dump() << '\n';
    else out << d.to_string() << '\n';
}

void cmd_eulerian(const Options& o, std::ostream& out)
{
    if (o.n < 0) throw ParseError("eulerian needs --n");
    const auto row = second_order_eulerian(o.n);
    if (choose_format(o.format, "lines", {"lines", "json"}) == "json") {
        Json arr = Json::array();
        for (const auto& c : row) arr.push_back(to_decimal(c));
        out << arr.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << to_decimal(row[i]);
    out << '\n';
}

void cmd_formula(const Options& o, std::ostream& out)
{
    if (o.list) {
        for (const auto& id : formulas::formula_ids()) out << id << '\n';
        return;
    }
    if (o.formula_id.empty()) throw ParseError("formula needs --id (or --list)");
    if (o.n < 0) throw ParseError("formula needs --n");
    const Polynomial v = formulas::evaluate(o.formula_id, formulas::FormulaArgs{o.n, o.m, o.d, o.k});
    if (choose_format(o.format, "lines", {"lines", "json"}) == "json") {
        std::vector<Var> vars = vars_used(v);
        out << to_json(v, vars).dump() << '\n';
    } else {
        out << v.to_string() << '\n';
    }
}

// "p=1,q=1" or "all=1".
std::vector<std::pair<Var, BigInt>> parse_spec(const std::string& text, const std::vector<Var>& vars)
{
    std::vector<std::pair<Var, BigInt>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw ParseError("bad --spec entry \"" + item + "\"; expected var=value");
        }
        const std::string name = item.substr(0, eq);
        BigInt value;
        try {
            value = BigInt(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("bad --spec value in \"" + item + "\"; expected an integer");
        }
        if (name == "all") {
            for (Var v : vars) out.emplace_back(v, value);
        } else if (name.size() == 1) {
            out.emplace_back(parse_var(name[0]), value);
        } else {
            throw ParseError("bad --spec variable \"" + name + "\"");
        }
    }
    return out;
}

void cmd_series(const Options& o, std::ostream& out)
{
    if (o.eq.empty()) throw ParseError("series needs --eq");
    if (o.order < 0) throw ParseError("--order must be non-negative");
    std::vector<Var> vars = equation_vars(o.eq);
    TruncatedSeries s = solve_equation(o.eq, o.order);
    for (const auto& [v, value] : parse_spec(o.spec, vars)) {
        s = s.specialize(v, value);
        vars.erase(std::remove(vars.begin(), vars.end(), v), vars.end());
    }
    const std::string fmt = choose_format(o.format, "lines", {"lines", "json", "csv"});
    if (fmt == "json") {
        out << to_json(s, vars).dump() << '\n';
    } else if (fmt == "csv") {
        out << "order,coefficient\n";
        for (int k = 0; k <= s.order(); ++k) out << k << ",\"" << s[k].to_string() << "\"\n";
    } else {
        for (int k = 0; k <= s.order(); ++k) out << s[k].to_string() << '\n';
    }
}

int cmd_biject(const Options& o, std::ostream& out)
{
    if (o.map == "verify") {
        if (o.verify_map.empty()) throw ParseError("biject verify needs --map");
        if (o.n < 1) throw ParseError("biject verify needs --n >= 1");
        require_order(o, "biject verify");
        BijectionReport r;
        try {
            r = verify_bijection(o.verify_map, o.n);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        Json j = Json::object();
        j["map"] = r.map;
        j["n"] = r.n;
        j["checked"] = r.checked;
        j["failures"] = r.failures;
        j["statistic_transport"] = r.statistic_transport;
        if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
        out << j.dump() << '\n';
        return r.failures == 0 && r.statistic_transport ? kExitOk : kExitVerificationFailed;
    }
    if (o.input.empty()) throw ParseError("biject " + o.map + " needs --input");
    const bool fwd = o.direction == "fwd";
    if (!fwd && o.direction != "inv") throw ParseError("--direction must be fwd or inv");
    if (o.map == "phi") {
        if (fwd) out << phi(StirlingPermutation(Word::parse(o.input))).to_string() << '\n';
        else out << phi_inverse(TernaryTree::parse(o.input)).to_string() << '\n';
    } else if (o.map == "psi") {
        if (fwd) {
            out << psi(StirlingPermutation(Word::parse(o.input))).to_string() << '\n';
        } else {
            // The 123 and 132 reconstructions coincide; pick by the perm's class.
            const APair a = APair::parse(o.input);
            const bool is123 = !contains(a.perm, Pattern::parse("123"));
            out << (is123 ? psi_inverse_123(a) : psi_inverse_132(a)).to_string() << '\n';
        }
    } else if (o.map == "rho") {
        if (fwd) out << rho(Word::parse(o.input)).to_string() << '\n';
        else out << rho_inverse(OrderedTree::parse(o.input)).to_string() << '\n';
    } else if (o.map == "fc") {
        if (fwd) out << to_fc_tree(APair::parse(o.input)).to_string() << '\n';
        else out << fc_to_pair(FCOrderedTree::parse(o.input)).to_string() << '\n';
    } else {
        throw ParseError("unknown map \"" + o.map + "\"; expected phi, psi, rho, fc or verify");
    }
    return kExitOk;
}

std::string abbreviate(const std::string& s)
{
    constexpr std::size_t kMax = 160;
    return s.size() <= kMax ? s : s.substr(0, kMax) + "...";
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const NRange range = NRange::parse(o.range);
    std::vector<CheckResult> results;
    try {
        results = run_suite(o.suite, range, o.jobs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::size_t failed = 0;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.id.size());
    for (const auto& r : results) {
        out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id << "  "
            << std::fixed << std::setprecision(3) << r.seconds << "s\n";
        if (r.pass) continue;
        ++failed;
        out << "      expected: " << abbreviate(r.expected) << '\n';
        out << "      actual:   " << abbreviate(r.actual) << '\n';
        if (!r.counterexample.empty()) out << "      counterexample: " << r.counterexample << '\n';
    }
    out << results.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pattern-avoiding Stirling permutations: enumeration, formulas, series and bijections", "stirperm"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--jobs", o.jobs, "Worker threads for enumeration (STIRPERM_JOBS overrides)")->check(CLI::PositiveNumber);

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Order")->check(CLI::NonNegativeNumber); };
    auto add_format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "Output format: lines, json or csv"); };

    CLI::App* en = app.add_subcommand("enumerate", "List Stirling permutations of order n, canonical order");
    add_n(en);
    en->add_option("--avoid", o.avoid, "Pattern to avoid (repeatable)");
    en->add_flag("--stats", o.stats, "Include des, asc, plat columns");
    add_format(en);
    en->add_flag("--force", o.force, "Allow orders above the default limit");

    CLI::App* di = app.add_subcommand("distribution", "Sum of p^plat q^des r^asc over the avoiders");
    add_n(di);
    di->add_option("--avoid", o.avoid, "Pattern to avoid (repeatable)");
    add_format(di);
    di->add_flag("--force", o.force, "Allow orders above the default limit");

    CLI::App* eu = app.add_subcommand("eulerian", "Second-order Eulerian numbers C(n,1..n)");
    add_n(eu);
    add_format(eu);

    CLI::App* fo = app.add_subcommand("formula", "Evaluate a closed-form count");
    fo->add_option("--id", o.formula_id, "Formula identifier (see --list)");
    add_n(fo);
    fo->add_option("--m", o.m, "Ascents");
    fo->add_option("--d", o.d, "Descents");
    fo->add_option("--k", o.k, "Plateaus");
    fo->add_flag("--list", o.list, "List formula identifiers");
    add_format(fo);

    CLI::App* se = app.add_subcommand("series", "Solve a functional equation as a truncated series");
    se->add_option("--eq", o.eq, "Equation: 213, 123, 132, R, prepend1:<chain>, prepend11:<chain>");
    se->add_option("--order", o.order, "Truncation order")->capture_default_str();
    se->add_option("--spec", o.spec, "Specialization, e.g. p=1,q=1 or all=1");
    add_format(se);

    CLI::App* bi = app.add_subcommand("biject", "Run a bijection or check one exhaustively");
    bi->add_option("action", o.map, "phi, psi, rho, fc or verify")->required();
    bi->add_option("--direction", o.direction, "fwd or inv")->capture_default_str();
    bi->add_option("--input", o.input, "Word, pair (perm;s1,s2,...) or tree string");
    bi->add_option("--map", o.verify_map, "Map to check with verify: phi, psi, psi132, rho, fc");
    add_n(bi);
    bi->add_flag("--force", o.force, "Allow orders above the default limit");

    CLI::App* ve = app.add_subcommand("verify", "Run registered checks and print a report");
    ve->add_option("--suite", o.suite, "Suite name or all")->capture_default_str();
    ve->add_option("--n", o.range, "Order range a..b")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        o.jobs = effective_jobs(o.jobs);
        if (en->parsed()) cmd_enumerate(o, out);
        else if (di->parsed()) cmd_distribution(o, out);
        else if (eu->parsed()) cmd_eulerian(o, out);
        else if (fo->parsed()) cmd_formula(o, out);
        else if (se->parsed()) cmd_series(o, out);
        else if (bi->parsed()) return cmd_biject(o, out);
        else if (ve->parsed()) return cmd_verify(o, out);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace stirperm
