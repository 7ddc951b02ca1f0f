#include "stirperm/recurrence.hpp"

#include "stirperm/error.hpp"

namespace stirperm {

PolyInV::PolyInV(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

PolyInV PolyInV::monomial(const Polynomial& c, int k)
{
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs[k] = c;
    return PolyInV(std::move(coeffs));
}

void PolyInV::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial PolyInV::coeff(int k) const
{
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Polynomial();
}

Polynomial PolyInV::at_one() const
{
    Polynomial sum;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

PolyInV& PolyInV::operator+=(const PolyInV& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

PolyInV& PolyInV::operator-=(const PolyInV& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

PolyInV operator*(const Polynomial& c, const PolyInV& a)
{
    std::vector<Polynomial> coeffs;
    coeffs.reserve(a.coeffs_.size());
    for (const auto& k : a.coeffs_) coeffs.push_back(c * k);
    return PolyInV(std::move(coeffs));
}

PolyInV PolyInV::shift(int k) const
{
    if (coeffs_.empty()) return {};
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(k));
    coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
    return PolyInV(std::move(coeffs));
}

PolyInV PolyInV::divide_by_one_minus_v() const
{
    // P = (1 - v) Q  <=>  Q_k = P_0 + ... + P_k, with P(1) = 0.
    std::vector<Polynomial> quotient;
    Polynomial running;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        running += coeffs_[k];
        quotient.push_back(running);
    }
    if (!at_one().is_zero()) {
        throw DivisibilityError("(1 - v) does not divide " + to_string());
    }
    return PolyInV(std::move(quotient));
}

std::string PolyInV::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[k].to_string() + ")";
        if (k == 1) out += "*v";
        else if (k > 1) out += "*v^" + std::to_string(k);
    }
    return out;
}

namespace {

const Polynomial& p = kP;
const Polynomial& q = kQ;
const Polynomial& r = kR;

// (L(v) - v^k L(1)) / (1 - v), times v.
PolyInV bracket(const PolyInV& l, int k)
{
    return (l - PolyInV::monomial(l.at_one(), k)).divide_by_one_minus_v().shift(1);
}

}  // namespace

PolyInV seed_L2()
{
    return PolyInV({p * p * r, p * p * q});
}

PolyInV seed_L3_123()
{
    return PolyInV({p.pow(3) * q * r, p * p * q * r * (Polynomial(2) * p + q), p * p * q * (p * r + q * r + p * q)});
}

Polynomial seed_f2()
{
    return p * (p * q + p * r + q * r);
}

RecurrenceTable recurrence_123(int order)
{
    RecurrenceTable t;
    t.L.resize(static_cast<std::size_t>(std::max(order, 3)) + 1);
    t.f.resize(t.L.size());
    t.L[1] = PolyInV({p});
    t.L[2] = seed_L2();
    t.L[3] = seed_L3_123();
    t.f[0] = 1;
    t.f[1] = p;
    const Polynomial pq = p * q;
    const Polynomial p2q2 = pq * pq;
    const Polynomial c_l2 = pq * (q * r + p * r - Polynomial(2) * pq);
    const Polynomial c_l3 = p2q2 * (r - p) * (r - q);
    const Polynomial c_f2 = p * p * (r * q - Polynomial(3) * q * q) + p2q2;
    for (std::size_t n = 2; n < t.L.size(); ++n) {
        if (n >= 4) {
            const int k = static_cast<int>(n);
            PolyInV l = Polynomial(2) * pq * t.L[n - 1] - p2q2 * t.L[n - 2];
            l += PolyInV::monomial(pq * t.f[n - 1], k - 2) + PolyInV::monomial(pq * t.f[n - 1], k - 1);
            l += PolyInV::monomial(c_f2 * t.f[n - 2], k - 2);
            l += pq * bracket(t.L[n - 1], k - 3);
            l += c_l2 * bracket(t.L[n - 2], k - 3);
            l += c_l3 * bracket(t.L[n - 3], k - 3);
            t.L[n] = std::move(l);
        }
        t.f[n] = pq * t.f[n - 1] + t.L[n].at_one() + q * (r - p) * t.L[n - 1].at_one();
    }
    t.L.resize(static_cast<std::size_t>(order) + 1);
    t.f.resize(static_cast<std::size_t>(order) + 1);
    return t;
}

RecurrenceTable recurrence_132(int order)
{
    RecurrenceTable t;
    t.L.resize(static_cast<std::size_t>(std::max(order, 2)) + 1);
    t.f.resize(t.L.size());
    t.L[1] = PolyInV({p});
    t.L[2] = seed_L2();
    t.f[0] = 1;
    t.f[1] = p;
    const Polynomial pq = p * q;
    const Polynomial pr = p * r;
    const Polynomial c_l2 = pq * r * (q - p);
    for (std::size_t n = 2; n < t.L.size(); ++n) {
        if (n >= 3) {
            const int k = static_cast<int>(n);
            PolyInV l = PolyInV::monomial(pq * t.f[n - 1], k - 1);
            l += Polynomial(2) * pr * t.L[n - 1];
            l += pq * bracket(t.L[n - 1], k - 2);
            l += c_l2 * bracket(t.L[n - 2], k - 2);
            l -= pr * pr * t.L[n - 2];
            t.L[n] = std::move(l);
        }
        t.f[n] = pr * t.f[n - 1] + t.L[n].at_one() + r * (q - p) * t.L[n - 1].at_one();
    }
    t.L.resize(static_cast<std::size_t>(order) + 1);
    t.f.resize(static_cast<std::size_t>(order) + 1);
    return t;
}

}  // namespace stirperm
