#include "stirperm/series.hpp"

#include <algorithm>

#include "stirperm/error.hpp"

namespace stirperm {

TruncatedSeries::TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<Polynomial> coefficients) : TruncatedSeries(order)
{
    const std::size_t n = std::min(coefficients.size(), coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) coeffs_[k] = std::move(coefficients[k]);
}

TruncatedSeries TruncatedSeries::constant(int order, const Polynomial& c)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::x(int order)
{
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t k = 0; k < n; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t k = 0; k < n; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o)
{
    *this = *this * o;
    return *this;
}

TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s)
{
    TruncatedSeries out = s;
    for (auto& k : out.coeffs_) {
        if (!k.is_zero()) k = c * k;
    }
    return out;
}

TruncatedSeries TruncatedSeries::shift(int k) const
{
    TruncatedSeries out(order());
    for (int i = 0; i + k <= order(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const Polynomial& c0 = coeffs_[0];
    if (!(c0 == Polynomial(1) || c0 == Polynomial(-1))) {
        throw DivisibilityError("series inverse needs constant term 1 or -1, got " + c0.to_string());
    }
    TruncatedSeries out(order());
    out.coeffs_[0] = c0;
    for (int k = 1; k <= order(); ++k) {
        Polynomial acc;
        for (int i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero() || out.coeffs_[k - i].is_zero()) continue;
            acc += coeffs_[i] * out.coeffs_[k - i];
        }
        // c0 * b_k = -sum, and c0^-1 == c0.
        out.coeffs_[k] = -(c0 * acc);
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const
{
    TruncatedSeries result = constant(order(), 1);
    TruncatedSeries base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::map_coefficients(const std::function<Polynomial(const Polynomial&)>& fn) const
{
    TruncatedSeries out(order());
    for (int k = 0; k <= order(); ++k) out.coeffs_[k] = fn(coeffs_[k]);
    return out;
}

TruncatedSeries TruncatedSeries::substitute_scale(Var target, Var by, int k) const
{
    return map_coefficients([=](const Polynomial& c) { return c.substitute_scale(target, by, k); });
}

TruncatedSeries TruncatedSeries::specialize(Var v, const BigInt& value) const
{
    return map_coefficients([&](const Polynomial& c) { return c.specialize(v, value); });
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    return TruncatedSeries(order, coeffs_);
}

bool TruncatedSeries::agrees_through(const TruncatedSeries& o, int k) const
{
    if (k > order() || k > o.order()) return false;
    for (int i = 0; i <= k; ++i) {
        if (coeffs_[i] != o.coeffs_[i]) return false;
    }
    return true;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner)
{
    if (!inner[0].is_zero()) {
        throw CompositionError("inner series has nonzero constant term " + inner[0].to_string());
    }
    const int order = std::min(outer.order(), inner.order());
    const TruncatedSeries in = inner.truncated(order);
    TruncatedSeries result = TruncatedSeries::constant(order, outer[order]);
    for (int k = order - 1; k >= 0; --k) result = result * in + outer[k];
    return result;
}

TruncatedSeries fixed_point(const TruncatedSeries& seed, const SeriesMap& step, std::vector<TruncatedSeries>* trace)
{
    TruncatedSeries s = seed;
    if (trace) trace->push_back(s);
    for (int i = 0; i <= seed.order(); ++i) {
        s = step(s);
        if (trace) trace->push_back(s);
    }
    if (step(s) != s) throw Error("fixed-point iteration did not settle after order + 1 steps");
    return s;
}

}  // namespace stirperm
