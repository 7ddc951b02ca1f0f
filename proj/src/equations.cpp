#include "stirperm/equations.hpp"

#include "stirperm/error.hpp"

namespace stirperm {

namespace {

const Polynomial& p = kP;
const Polynomial& q = kQ;
const Polynomial& r = kR;

}  // namespace

TruncatedSeries solve_213(int order)
{
    const Polynomial c1 = p * r + q * r + p * q;
    const Polynomial c2 = q * r * (r + p + q);
    const Polynomial c3 = q.pow(2) * r.pow(2);
    auto step = [&](const TruncatedSeries& f) {
        TruncatedSeries f2 = f * f;
        TruncatedSeries rhs = TruncatedSeries::constant(order, p) + c1 * f + c2 * f2 + c3 * (f2 * f);
        return rhs.shift();
    };
    return fixed_point(TruncatedSeries(order), step);
}

TruncatedSeries c213(int order)
{
    return solve_213(order) + Polynomial(1);
}

TruncatedSeries solve_123(int order)
{
    const TruncatedSeries x = TruncatedSeries::x(order);
    // 2 + x(pr+qr-pq) and 1 - x(p-r)(q-r)
    const TruncatedSeries a = TruncatedSeries::constant(order, 2) + (p * r + q * r - p * q) * x;
    const TruncatedSeries b = TruncatedSeries::constant(order, 1) - ((p - r) * (q - r)) * x;
    const Polynomial pq = p * q;
    auto step = [&](const TruncatedSeries& f) {
        TruncatedSeries inner = a * f - pq * (b * (f * f)).shift() - Polynomial(1);
        return (pq * (inner * f)).shift() + Polynomial(1);
    };
    return fixed_point(TruncatedSeries::constant(order, 1), step);
}

TruncatedSeries solve_132(int order)
{
    const TruncatedSeries x = TruncatedSeries::x(order);
    // r(2 + (pr - pq + q^2) x)
    const TruncatedSeries a = r * (TruncatedSeries::constant(order, 2) + (p * r - p * q + q * q) * x);
    const Polynomial pr2 = p * r * r;
    const Polynomial q_minus_2r = q - Polynomial(2) * r;
    auto step = [&](const TruncatedSeries& f) {
        TruncatedSeries inner = a * f - pr2 * (f * f).shift() + q_minus_2r;
        return (p * (inner * f)).shift() + Polynomial(1);
    };
    return fixed_point(TruncatedSeries::constant(order, 1), step);
}

TruncatedSeries recover_from_f(const TruncatedSeries& f)
{
    TruncatedSeries g = f - Polynomial(1);
    g = g.map_coefficients([](const Polynomial& c) { return c.divide_by_var(Var::q); });
    return g + Polynomial(1);
}

TruncatedSeries c123(int order)
{
    return recover_from_f(solve_123(order));
}

TruncatedSeries c132(int order)
{
    return recover_from_f(solve_132(order));
}

TruncatedSeries avoid_pair_prepend1(const TruncatedSeries& f_sub, ChainForm form)
{
    const Polynomial mixed = form == ChainForm::exact ? q + p : Polynomial(1) + p;
    const int order = f_sub.order();
    const TruncatedSeries g = f_sub - Polynomial(1);
    const TruncatedSeries g2 = g * g;
    TruncatedSeries numer = TruncatedSeries::constant(order, p) + (r * (p + q)) * g + (q * r * r) * g2;
    TruncatedSeries denom = TruncatedSeries::constant(order, 1)
        - (TruncatedSeries::constant(order, p * q) + (q * r * mixed) * g + (q * q * r * r) * g2).shift();
    return numer.shift() / denom + Polynomial(1);
}

TruncatedSeries avoid_pair_prepend11(const TruncatedSeries& f_sub, ChainForm form)
{
    const Polynomial pair_weight = form == ChainForm::exact ? q * q * r : q * r;
    const int order = f_sub.order();
    const TruncatedSeries g = f_sub - Polynomial(1);
    // Terms not involving F_tau, and the coefficients of H and H^2 (H = F_tau - 1).
    const TruncatedSeries free_part = TruncatedSeries::constant(order, p) + (p * r) * g;
    const TruncatedSeries lin = TruncatedSeries::constant(order, (p + r) * q) + (q * r * (p + r)) * g;
    const TruncatedSeries quad = TruncatedSeries::constant(order, pair_weight) + (q * q * r * r) * g;
    auto step = [&](const TruncatedSeries& f) {
        TruncatedSeries h = f - Polynomial(1);
        return (free_part + lin * h + quad * (h * h)).shift() + Polynomial(1);
    };
    return fixed_point(TruncatedSeries::constant(order, 1), step);
}

PatternChain PatternChain::parse(std::string_view text)
{
    PatternChain chain;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);
        if (item == "1") chain.pieces.push_back(ChainPiece::one);
        else if (item == "11") chain.pieces.push_back(ChainPiece::pair);
        else throw ParseError("chain pieces must be 1 or 11, got \"" + std::string(item) + "\"");
        start = end + 1;
    }
    if (chain.pieces.empty() || chain.pieces.back() != ChainPiece::pair) {
        throw ParseError("pattern chain \"" + std::string(text) + "\" must end with 11");
    }
    return chain;
}

Pattern PatternChain::pattern() const
{
    auto piece = [](ChainPiece c) { return Pattern(c == ChainPiece::one ? Word{1} : Word{1, 1}); };
    Pattern out = piece(pieces.front());
    for (std::size_t i = 1; i < pieces.size(); ++i) out = out.direct_sum(piece(pieces[i]));
    return out;
}

std::string PatternChain::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += ',';
        out += pieces[i] == ChainPiece::one ? "1" : "11";
    }
    return out;
}

TruncatedSeries avoid_pair_chain(const PatternChain& chain, int order, ChainForm form)
{
    TruncatedSeries f = TruncatedSeries::constant(order, 1);  // F_11
    for (std::size_t i = chain.pieces.size() - 1; i-- > 0;) {
        f = chain.pieces[i] == ChainPiece::one ? avoid_pair_prepend1(f, form) : avoid_pair_prepend11(f, form);
    }
    return f;
}

TruncatedSeries solve_r(int order)
{
    auto step = [&](const TruncatedSeries& rs) {
        TruncatedSeries r_pz = rs.substitute_scale(Var::p, Var::z, 1);
        TruncatedSeries r_pz2 = rs.substitute_scale(Var::p, Var::z, 2);
        TruncatedSeries d = TruncatedSeries::constant(order, 1) - ((r_pz - Polynomial(1) + p) * r_pz2).shift();
        return d.inverse();
    };
    return fixed_point(TruncatedSeries::constant(order, 1), step);
}

TruncatedSeries catalan_series(int order)
{
    auto step = [](const TruncatedSeries& c) { return (c * c).shift() + Polynomial(1); };
    return fixed_point(TruncatedSeries::constant(order, 1), step);
}

TruncatedSeries solve_equation(std::string_view id, int order)
{
    if (id == "213") return c213(order);
    if (id == "123") return c123(order);
    if (id == "132") return c132(order);
    if (id == "R") return solve_r(order);
    struct Verb {
        std::string_view prefix;
        ChainPiece head;
        ChainForm form;
    };
    for (const Verb& verb : {Verb{"prepend1:", ChainPiece::one, ChainForm::exact},
                             Verb{"prepend11:", ChainPiece::pair, ChainForm::exact},
                             Verb{"prepend1-printed:", ChainPiece::one, ChainForm::printed},
                             Verb{"prepend11-printed:", ChainPiece::pair, ChainForm::printed}}) {
        const auto prefix = verb.prefix;
        const auto head = verb.head;
        if (!id.starts_with(prefix)) continue;
        PatternChain chain;
        try {
            chain = PatternChain::parse(id.substr(prefix.size()));
        } catch (const ParseError& e) {
            throw UnknownEquation("equation \"" + std::string(id) + "\": " + e.what());
        }
        // The chain spells the whole pattern; its first piece is the one prepended.
        if (chain.pieces.size() < 2 || chain.pieces.front() != head) {
            throw UnknownEquation("equation \"" + std::string(id) + "\": chain must start with " +
                                  (head == ChainPiece::one ? "1" : "11") + " and have at least two pieces");
        }
        return avoid_pair_chain(chain, order, verb.form);
    }
    throw UnknownEquation("unknown equation \"" + std::string(id) + "\"");
}

std::vector<Var> equation_vars(std::string_view id)
{
    if (id == "R") return {Var::p, Var::z};
    return {Var::p, Var::q, Var::r};
}

}  // namespace stirperm
