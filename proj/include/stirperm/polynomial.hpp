#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stirperm/bigint.hpp"

namespace stirperm {

enum class Var : std::size_t { p = 0, q = 1, r = 2, z = 3 };

inline constexpr std::size_t kVarCount = 4;

char var_name(Var v);
Var parse_var(char c);  // throws ParseError

using Exponents = std::array<int, kVarCount>;

/// Exact-integer Laurent polynomial in p, q, r, z. Negative exponents are
/// representable; is_polynomial() reports whether any survive.
class Polynomial {
public:
    using TermMap = std::map<Exponents, BigInt>;

    Polynomial() = default;
    Polynomial(const BigInt& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial var(Var v, int power = 1);
    static Polynomial monomial(const Exponents& e, const BigInt& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    BigInt coeff(const Exponents& e) const;
    BigInt constant_term() const { return coeff(Exponents{}); }
    bool is_constant() const;
    bool is_polynomial() const;
    int min_degree(Var v) const;
    int max_degree(Var v) const;

    /// Sum of coefficients, i.e. the value at p = q = r = z = 1.
    BigInt value_at_ones() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    Polynomial pow(unsigned k) const;

    /// Multiply by v^k (k may be negative).
    Polynomial shift(Var v, int k) const;

    /// Divide by v^k; every term must carry at least k powers of v and none
    /// may be negative afterwards. Throws DivisibilityError otherwise.
    Polynomial divide_by_var(Var v, int k = 1) const;

    /// target -> target * by^k, i.e. exponent of `by` grows by k per power of
    /// `target`.
    Polynomial substitute_scale(Var target, Var by, int k) const;

    /// Evaluate one variable at an integer. Negative exponents are allowed
    /// only for the values 1 and -1.
    Polynomial specialize(Var v, const BigInt& value) const;

    /// Rename variables: variable i becomes image[i].
    Polynomial permute(const std::array<Var, kVarCount>& image) const;
    Polynomial swap(Var a, Var b) const;

    /// Coefficients of powers of v, from min_degree(v) upwards, requiring all
    /// other exponents to be zero.
    std::vector<BigInt> univariate_coefficients(Var v) const;

    /// Human readable, e.g. "p^2*q + p^2*r + p*q*r" (terms by descending exponent vector).
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Exponents& e, const BigInt& c);

    TermMap terms_;
};

inline const Polynomial kP = Polynomial::var(Var::p);
inline const Polynomial kQ = Polynomial::var(Var::q);
inline const Polynomial kR = Polynomial::var(Var::r);
inline const Polynomial kZ = Polynomial::var(Var::z);

}  // namespace stirperm
