#include "steiner/exact.hpp"

#include "doctest.h"
#include "steiner/error.hpp"
#include "steiner/indices.hpp"

using namespace steiner;

namespace {

BigCount factorial(long n) {
    BigCount f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(12, 12) == 1);
}

TEST_CASE("binomial against the factorial-ratio oracle") {
    // 68 choose 34 needs more than 64 bits.
    BigCount expected = factorial(68) / (factorial(34) * factorial(34));
    BigCount got = binomial(68, 34);
    CHECK(got == expected);
    BigCount two64 = 1;
    two64 <<= 64;
    CHECK(got > two64);

    for (long n = 0; n <= 40; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == factorial(n) / (factorial(k) * factorial(n - k)));
        }
    }
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
    for (long n = 1; n <= 60; n += 7) {
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("Ratio reduces to lowest terms") {
    Ratio r(BigInt(6), BigCount(4));
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    CHECK(r.is_reduced());
    CHECK(r.str() == "3/2");

    Ratio whole(BigInt(8), BigCount(4));
    CHECK(whole.str() == "2/1");

    CHECK(Ratio(BigInt(0), BigCount(5)).str() == "0/1");
    CHECK_THROWS_AS(Ratio(BigInt(1), BigCount(0)), ParameterOutOfRange);
}

TEST_CASE("Ratio comparisons are exact") {
    Ratio a(BigInt(2), BigCount(3));
    Ratio b(BigInt(3), BigCount(4));
    CHECK(a < b);
    CHECK(b > a);
    CHECK(a == Ratio(BigInt(4), BigCount(6)));
    CHECK(Ratio(BigInt(18), BigCount(17)) > Ratio(1));
    CHECK(Ratio(BigInt(18), BigCount(17)).approx() == doctest::Approx(18.0 / 17.0));
}
