#include "delannoy/combinatorics.hpp"
#include "delannoy/rational.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace delannoy;

namespace {

bool is_canonical(const Rational& q) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return q.denominator() > 0 && g == 1;
}

} // namespace

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/7").str() == "3/7");
    CHECK(Rational::parse("-1/2").str() == "-1/2");
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("0/5").str() == "0");
    for (const char* bad : {"", "1/0", "4/-8", "0.5", "1e3", "x", "1/", "/2", "1/2/3", " 1"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    const Rational a(1, 2), b(-2, 3);
    CHECK((a + b).str() == "-1/6");
    CHECK((a - b).str() == "7/6");
    CHECK((a * b).str() == "-1/3");
    CHECK((a / b).str() == "-3/4");
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(power(Rational(-2, 3), 3).str() == "-8/27");
    CHECK(power(Rational(2, 3), -2).str() == "9/4");
    CHECK(power(Rational(7), 0u) == Rational(1));
    CHECK(b < a);
    CHECK(Rational(-3).is_nonpositive_integer());
    CHECK(!Rational(-3, 2).is_nonpositive_integer());
    CHECK(sign_power(3) == -1);
}

TEST_CASE("canonical form survives long operation chains") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rational acc = rng.rational();
        for (int step = 0; step < 20; ++step) {
            Rational v = rng.rational();
            switch (rng.integer(0, 3)) {
            case 0: acc += v; break;
            case 1: acc -= v; break;
            case 2: acc *= v; break;
            default:
                if (!v.is_zero()) acc /= v;
            }
            REQUIRE(is_canonical(acc));
        }
    }
}

TEST_CASE("integer binomials against Pascal's triangle") {
    auto tri = oracle::pascal(40);
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(binom_int(n, k) == tri[n][k]);
    CHECK(binom_int(4, 2) == 6);
    CHECK(binom_int(20, 10) == 184756);
    CHECK(binom_int(3, 5) == 0);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("generalized binomial") {
    CHECK(binom_gen(5, 2) == Rational(10));
    CHECK(binom_gen(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(binom_gen(Rational(3, 2), 5) == Rational(-3, 256));
    CHECK(binom_gen(Rational(-7, 3), 4) == Rational(1820, 243));
    CHECK(binom_gen(3, 5) == Rational(0));
    CHECK(binom_gen(Rational(9, 4), 0) == Rational(1));

    for (unsigned k = 0; k <= 20; ++k)
        CHECK(binom_gen(Rational(-1, 2), k) ==
              Rational(binom_int(2 * k, k)) / power(Rational(-4), static_cast<int>(k)));

    oracle::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        Rational z = rng.rational(20, 7);
        unsigned k = rng.integer(0, 12);
        CHECK(binom_gen(z, k) == oracle::from_mpq(oracle::binom(oracle::to_mpq(z), k)));
    }
    for (int z = -5; z <= 12; ++z)
        for (unsigned k = 0; k <= 14; ++k)
            CHECK(binom_gen(z, k) == oracle::from_mpq(oracle::binom(z, k)));
}

TEST_CASE("Pascal recurrence on random rationals") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Rational z = rng.rational(30, 11);
        unsigned k = rng.integer(1, 25);
        CHECK(binom_gen(z, k) == binom_gen(z - 1, k) + binom_gen(z - 1, k - 1));
    }
}

TEST_CASE("rising factorial") {
    CHECK(pochhammer(1, 4) == Rational(24));
    CHECK(pochhammer(-3, 5) == Rational(0));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(2, 3), 0) == Rational(1));
    CHECK(falling_factorial(Rational(5, 2), 3) == Rational(15, 8));

    oracle::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = rng.rational(15, 8);
        unsigned k = rng.integer(0, 50);
        CHECK(pochhammer(a, k) == Rational(sign_power(k)) * binom_gen(-a, k) * Rational(factorial(k)));
    }
}
