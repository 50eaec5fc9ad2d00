#include <doctest.h>

#include "simflow/error.hpp"
#include "simflow/polynomial.hpp"

using namespace simflow;

namespace {

Polynomial poly(std::initializer_list<long> coefficients)
{
    std::vector<BigInt> c;
    for (long x : coefficients) c.emplace_back(x);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("polynomial basics")
{
    const auto p = poly({-6, 11, -6, 1});
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "q^3 - 6q^2 + 11q - 6");
    CHECK(p.evaluate(1) == 0);
    CHECK(p.evaluate(4) == 6);
    CHECK(poly({1, -1}).to_string() == "-q + 1");
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({0, 0, 0}).degree() == -1);
    CHECK(Polynomial().to_string() == "0");
    CHECK(poly({0, 1}).to_string("lambda") == "lambda");
    CHECK(Polynomial::monomial(3, 2) == poly({0, 0, 3}));
    CHECK(p.coefficient(7) == 0);
}

TEST_CASE("polynomial arithmetic")
{
    const auto a = poly({-1, 1});
    const auto b = poly({-2, 1});
    const auto c = poly({-3, 1});
    CHECK(a * b * c == poly({-6, 11, -6, 1}));
    CHECK(a + b == poly({-3, 2}));
    CHECK(a - a == Polynomial());
    CHECK((a - poly({0, 1})).degree() == 0);
}

TEST_CASE("interpolation")
{
    bool integral = false;
    const auto p = interpolate({1, 2, 3, 4}, {0, 0, 2, 6}, integral);
    CHECK(integral);
    CHECK(p == poly({2, -3, 1}));

    const auto half = interpolate({0, 1, 2}, {0, 0, 1}, integral);
    CHECK_FALSE(integral);
    CHECK(half.degree() >= 0);

    const auto constant = interpolate({5}, {9}, integral);
    CHECK(integral);
    CHECK(constant == poly({9}));
}

TEST_CASE("bivariate polynomials")
{
    BivariatePolynomial t;
    t.add(2, 0, 1);
    t.add(1, 0, 1);
    t.add(0, 1, 1);
    CHECK(t.to_string() == "x^2 + x + y");
    CHECK(t.evaluate(1, 1) == 3);
    CHECK(t.evaluate(2, 3) == 9);
    CHECK(t.swapped().to_string() == "y^2 + x + y");
    CHECK(t.swapped().swapped() == t);

    BivariatePolynomial s;
    s.add_shifted(1, 1, 2); // 2(x-1)(y-1)
    CHECK(s.coefficient(1, 1) == 2);
    CHECK(s.coefficient(1, 0) == -2);
    CHECK(s.coefficient(0, 1) == -2);
    CHECK(s.coefficient(0, 0) == 2);
    s.add(1, 1, -2);
    CHECK(s.coefficient(1, 1) == 0);
    CHECK(s.terms().count({1, 1}) == 0);
    CHECK(BivariatePolynomial().to_string() == "0");
    CHECK(BivariatePolynomial().is_zero());
}

TEST_CASE("quasipolynomials")
{
    const Quasipolynomial rp2({poly({1}), Polynomial()});
    CHECK(rp2.period() == 2);
    CHECK(rp2.evaluate(4) == 1);
    CHECK(rp2.evaluate(7) == 0);
    CHECK(rp2.to_string() == "1; 0");
    CHECK(rp2.degree() == 0);
    CHECK(&rp2.constituent(5) == &rp2.constituents()[1]);
    CHECK_THROWS_AS(Quasipolynomial(std::vector<Polynomial>{}), Error);
}
