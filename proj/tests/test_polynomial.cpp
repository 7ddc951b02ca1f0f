#include "doctest.h"
#include "stirperm/bigint.hpp"
#include "stirperm/error.hpp"
#include "stirperm/json_io.hpp"
#include "stirperm/polynomial.hpp"
#include "stirperm/series.hpp"

using namespace stirperm;

TEST_CASE("binomials extend to every integer argument")
{
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(-1, 0) == 1);
    CHECK(binom(-2, 3) == -4);  // (-2)(-3)(-4)/3!
    CHECK(binom(-1, 4) == 1);
    CHECK(binom(60, 30) == BigInt("118264581564861424"));
    CHECK(exact_div(12, 4, "t") == 3);
    CHECK_THROWS_AS(exact_div(13, 4, "t"), DivisibilityError);
    CHECK(factorial(10) == 3628800);
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(5) == 945);
}

TEST_CASE("polynomial ring operations")
{
    const Polynomial a = kP + kQ;
    const Polynomial b = kP - kQ;
    CHECK(a * b == kP.pow(2) - kQ.pow(2));
    CHECK((a - a).is_zero());
    CHECK(a.pow(0) == Polynomial(1));
    CHECK(a.pow(3).value_at_ones() == 8);
    CHECK((-a).value_at_ones() == -2);
    CHECK(Polynomial(7).is_constant());
    CHECK(Polynomial(7).constant_term() == 7);
    CHECK_FALSE(a.is_constant());
    CHECK((kP * kQ.pow(2)).max_degree(Var::q) == 2);
}

TEST_CASE("printing orders terms by descending exponent vector")
{
    const Polynomial d = kP.pow(2) * kR + kP * kQ * kR + kP.pow(2) * kQ;
    CHECK(d.to_string() == "p^2*q + p^2*r + p*q*r");
    CHECK(Polynomial().to_string() == "0");
    CHECK((Polynomial(2) * kZ - 3).to_string() == "2*z - 3");
}

TEST_CASE("shifts, divisions and Laurent terms")
{
    const Polynomial f = kQ * (kP + kQ);
    CHECK(f.divide_by_var(Var::q) == kP + kQ);
    CHECK_THROWS_AS(f.divide_by_var(Var::q, 2), DivisibilityError);
    const Polynomial laurent = kR.shift(Var::r, -3);
    CHECK_FALSE(laurent.is_polynomial());
    CHECK(laurent.min_degree(Var::r) == -2);
    CHECK(laurent.specialize(Var::r, 1) == Polynomial(1));
    CHECK(laurent.specialize(Var::r, -1) == Polynomial(1));
    CHECK_THROWS_AS(laurent.specialize(Var::r, 2), NonPolynomialResult);
}

TEST_CASE("substitution p -> p z^k shifts z by k per power of p")
{
    const Polynomial f = kP.pow(2) + kP * kQ + 1;
    CHECK(f.substitute_scale(Var::p, Var::z, 2) == kP.pow(2) * kZ.pow(4) + kP * kQ * kZ.pow(2) + 1);
    CHECK(f.specialize(Var::p, 2) == Polynomial(5) + 2 * kQ);
}

TEST_CASE("variable permutations")
{
    const Polynomial f = kP.pow(2) * kQ + kR;
    CHECK(f.swap(Var::p, Var::q) == kQ.pow(2) * kP + kR);
    CHECK(f.permute({Var::q, Var::r, Var::p, Var::z}) == kQ.pow(2) * kR + kP);
    CHECK((kP.pow(2) + kP * 3).univariate_coefficients(Var::p) == std::vector<BigInt>{3, 1});
    CHECK_THROWS_AS((kP + kQ).univariate_coefficients(Var::p), Error);
}

TEST_CASE("polynomial json round trip")
{
    const Polynomial f = kP.pow(2) * kR - BigInt("123456789012345678901234567890") * kQ + 4;
    const Json j = to_json(f, {Var::p, Var::q, Var::r});
    CHECK(j["vars"] == Json::array({"p", "q", "r"}));
    CHECK(polynomial_from_json(j) == f);
    CHECK(polynomial_from_json(Json::parse(j.dump())) == f);
    CHECK_THROWS_AS(to_json(kZ, {Var::p}), Error);
    CHECK(vars_used(f) == std::vector<Var>{Var::p, Var::q, Var::r});
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"vars":["p"],"terms":[{"exp":[1,2],"coef":"1"}]})")),
                    ParseError);
}

TEST_CASE("series json round trip")
{
    TruncatedSeries s(3, {1, kP, kP * kZ + 2, kZ.pow(3)});
    const Json j = to_json(s, {Var::p, Var::z});
    CHECK(j["order"] == 3);
    CHECK(series_from_json(j) == s);
}
