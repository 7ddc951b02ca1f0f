#pragma once

#include <functional>
#include <vector>

#include "stirperm/polynomial.hpp"

namespace stirperm {

/// Power series in x truncated after x^order, with Polynomial coefficients.
/// All arithmetic is exact modulo x^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0);
    TruncatedSeries(int order, std::vector<Polynomial> coefficients);

    static TruncatedSeries constant(int order, const Polynomial& c);
    static TruncatedSeries x(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& operator[](int k) const { return coeffs_[k]; }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }
    void set(int k, Polynomial c) { coeffs_.at(k) = std::move(c); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s);
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }
    friend TruncatedSeries operator+(TruncatedSeries a, const Polynomial& c)
    {
        a.coeffs_[0] += c;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const Polynomial& c)
    {
        a.coeffs_[0] -= c;
        return a;
    }

    /// Multiply by x^k, k >= 0.
    TruncatedSeries shift(int k = 1) const;

    /// Multiplicative inverse; the constant coefficient must be 1 or -1.
    TruncatedSeries inverse() const;

    TruncatedSeries pow(unsigned k) const;

    TruncatedSeries map_coefficients(const std::function<Polynomial(const Polynomial&)>& fn) const;
    TruncatedSeries substitute_scale(Var target, Var by, int k) const;
    TruncatedSeries specialize(Var v, const BigInt& value) const;

    /// Same truncation with the trailing coefficients dropped or zero-padded.
    TruncatedSeries truncated(int order) const;

    /// Coefficients of x^0..x^k coincide.
    bool agrees_through(const TruncatedSeries& o, int k) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

/// outer(inner) modulo x^(order+1); inner must have zero constant term
/// (throws CompositionError).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

using SeriesMap = std::function<TruncatedSeries(const TruncatedSeries&)>;

/// Iterate s <- step(s) from seed, order + 1 times. `step` must gain at least
/// one exact x-order per application (every non-constant dependence on s
/// carries a factor x). One further step is applied and must be a no-op,
/// otherwise Error is thrown. When trace is given it receives every iterate,
/// starting with the seed.
TruncatedSeries fixed_point(const TruncatedSeries& seed, const SeriesMap& step,
                            std::vector<TruncatedSeries>* trace = nullptr);

}  // namespace stirperm
