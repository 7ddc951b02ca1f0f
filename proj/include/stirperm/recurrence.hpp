#pragma once

#include <string>
#include <vector>

#include "stirperm/polynomial.hpp"

namespace stirperm {

/// Polynomial in the catalytic variable v with Polynomial (p,q,r) coefficients;
/// coefficients()[k] multiplies v^k.
class PolyInV {
public:
    PolyInV() = default;
    explicit PolyInV(std::vector<Polynomial> coefficients);
    static PolyInV monomial(const Polynomial& c, int k);

    const std::vector<Polynomial>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Polynomial coeff(int k) const;
    Polynomial at_one() const;

    PolyInV& operator+=(const PolyInV& o);
    PolyInV& operator-=(const PolyInV& o);
    friend PolyInV operator+(PolyInV a, const PolyInV& b) { return a += b; }
    friend PolyInV operator-(PolyInV a, const PolyInV& b) { return a -= b; }
    friend PolyInV operator*(const Polynomial& c, const PolyInV& a);

    PolyInV shift(int k) const;  // times v^k, k >= 0

    /// Exact quotient by (1 - v); throws DivisibilityError unless the value at
    /// v = 1 vanishes.
    PolyInV divide_by_one_minus_v() const;

    std::string to_string() const;

    friend bool operator==(const PolyInV&, const PolyInV&) = default;

private:
    void trim();

    std::vector<Polynomial> coeffs_;
};

/// L[n] = L_n(v) = sum_i f(n|ii) v^(i-1) and f[n] = the order-n distribution,
/// for n = 0..order (L[0] is zero).
struct RecurrenceTable {
    std::vector<PolyInV> L;
    std::vector<Polynomial> f;
};

/// 123-avoiders: seeded with L_1, L_2, L_3, f(0), f(1); L_n for n >= 4 from the
/// three-term recurrence, f(n) - pq f(n-1) = L_n(1) + q(r-p) L_{n-1}(1).
RecurrenceTable recurrence_123(int order);

/// 132-avoiders: seeded with L_1, L_2, g(0), g(1); L_n for n >= 3, and
/// g(n) - pr g(n-1) = L_n(1) + r(q-p) L_{n-1}(1).
RecurrenceTable recurrence_132(int order);

/// The printed seeds, for checking against the recurrence and brute force.
PolyInV seed_L2();
PolyInV seed_L3_123();
Polynomial seed_f2();

}  // namespace stirperm
