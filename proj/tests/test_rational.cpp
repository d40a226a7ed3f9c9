#include "generators.hpp"

#include "kunum/rational.hpp"

#include <doctest.h>

using kunum::Rat;

TEST_CASE("lowest terms and sign normalisation")
{
    CHECK(Rat(6, -8).str() == "-3/4");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(10, 5).str() == "2");
    CHECK(Rat(6, -8).den() == 4);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("parse")
{
    CHECK(Rat::parse("7/4") == Rat(7, 4));
    CHECK(Rat::parse("-14/8") == Rat(-7, 4));
    CHECK(Rat::parse("+3") == Rat(3));
    CHECK(Rat::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
}

TEST_CASE("floor, ceil and integer conversion")
{
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(4).floor() == 4);
    CHECK(Rat(-12).to_int64() == -12);
    CHECK_THROWS_AS(Rat(1, 2).to_int64(), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational gcd")
{
    CHECK(kunum::rational_gcd(Rat(1, 8), Rat(1)) == Rat(1, 8));
    CHECK(kunum::rational_gcd(Rat(0), Rat(-2)) == Rat(2));
    CHECK(kunum::rational_gcd(Rat(3, 4), Rat(1, 6)) == Rat(1, 12));
    CHECK(kunum::rational_gcd(Rat(0), Rat(0)) == Rat(0));
}

TEST_CASE("field axioms on random values")
{
    kunum::testing::Gen g(1);
    for (int i = 0; i < 200; ++i) {
        const Rat a = g.rat(), b = g.rat(), c = g.rat();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        CHECK(Rat::parse(a.str()) == a);
        CHECK(((a <=> b) == 0) == (a == b));
    }
}
