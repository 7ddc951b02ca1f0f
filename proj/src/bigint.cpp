#include "stirperm/bigint.hpp"

namespace stirperm {

BigInt binom(long long a, long long b)
{
    if (b < 0) return 0;
    if (a < 0) {
        BigInt v = binom(b - a - 1, b);
        return (b % 2 == 0) ? v : BigInt(-v);
    }
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& context)
{
    if (den == 0) throw DivisibilityError(context + ": division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw DivisibilityError(context + ": " + num.str() + " is not divisible by " + den.str());
    }
    return q;
}

BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial_odd(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

}  // namespace stirperm
