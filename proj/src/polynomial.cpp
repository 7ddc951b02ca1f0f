#include "stirperm/polynomial.hpp"

#include <algorithm>
#include <climits>

#include "stirperm/error.hpp"

namespace stirperm {

char var_name(Var v)
{
    static constexpr char names[kVarCount] = {'p', 'q', 'r', 'z'};
    return names[static_cast<std::size_t>(v)];
}

Var parse_var(char c)
{
    switch (c) {
    case 'p': return Var::p;
    case 'q': return Var::q;
    case 'r': return Var::r;
    case 'z': return Var::z;
    default: throw ParseError(std::string("unknown variable '") + c + "'");
    }
}

Polynomial::Polynomial(const BigInt& constant)
{
    if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Polynomial Polynomial::var(Var v, int power)
{
    Exponents e{};
    e[static_cast<std::size_t>(v)] = power;
    return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const BigInt& c)
{
    Polynomial out;
    out.add_term(e, c);
    return out;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt Polynomial::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

bool Polynomial::is_polynomial() const
{
    for (const auto& [e, c] : terms_) {
        for (int k : e) {
            if (k < 0) return false;
        }
    }
    return true;
}

int Polynomial::min_degree(Var v) const
{
    if (terms_.empty()) return 0;
    int m = INT_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<std::size_t>(v)]);
    return m;
}

int Polynomial::max_degree(Var v) const
{
    if (terms_.empty()) return 0;
    int m = INT_MIN;
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<std::size_t>(v)]);
    return m;
}

BigInt Polynomial::value_at_ones() const
{
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result = 1;
    Polynomial base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

Polynomial Polynomial::shift(Var v, int k) const
{
    Polynomial out;
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        e[static_cast<std::size_t>(v)] += k;
        out.terms_.emplace(e, c);
    }
    return out;
}

Polynomial Polynomial::divide_by_var(Var v, int k) const
{
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
        if (e[idx] < k) {
            throw DivisibilityError(to_string() + " is not divisible by " + var_name(v) + "^" + std::to_string(k));
        }
    }
    return shift(v, -k);
}

Polynomial Polynomial::substitute_scale(Var target, Var by, int k) const
{
    const auto t = static_cast<std::size_t>(target);
    const auto b = static_cast<std::size_t>(by);
    Polynomial out;
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        e[b] += k * e[t];
        out.add_term(e, c);
    }
    return out;
}

Polynomial Polynomial::specialize(Var v, const BigInt& value) const
{
    const auto idx = static_cast<std::size_t>(v);
    Polynomial out;
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        int k = e[idx];
        e[idx] = 0;
        if (k < 0 && value != 1 && value != -1) {
            throw NonPolynomialResult(std::string("cannot evaluate negative power of ") + var_name(v) + " at " + value.str());
        }
        BigInt factor = boost::multiprecision::pow(value, static_cast<unsigned>(k < 0 ? -k : k));
        out.add_term(e, c * factor);
    }
    return out;
}

Polynomial Polynomial::permute(const std::array<Var, kVarCount>& image) const
{
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        Exponents f{};
        for (std::size_t i = 0; i < kVarCount; ++i) f[static_cast<std::size_t>(image[i])] += e[i];
        out.add_term(f, c);
    }
    return out;
}

Polynomial Polynomial::swap(Var a, Var b) const
{
    std::array<Var, kVarCount> image{Var::p, Var::q, Var::r, Var::z};
    std::swap(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
    return permute(image);
}

std::vector<BigInt> Polynomial::univariate_coefficients(Var v) const
{
    const auto idx = static_cast<std::size_t>(v);
    if (terms_.empty()) return {};
    const int lo = min_degree(v);
    std::vector<BigInt> out(max_degree(v) - lo + 1, 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (i != idx && e[i] != 0) throw Error("polynomial " + to_string() + " is not univariate in " + var_name(v));
        }
        out[e[idx] - lo] = c;
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(static_cast<Var>(i));
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace stirperm
