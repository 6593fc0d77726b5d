#include "delannoy/combinatorics.hpp"
#include "delannoy/sequences.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <future>
#include <vector>

using namespace delannoy;

namespace {

const char* const kD2 = "2*x^2 + 2*x + r + 1";
const char* const kD3 = "4/3*x^3 + 2*x^2 + 2*x*r + 8/3*x + r + 1";
const char* const kD4 =
    "2/3*x^4 + 4/3*x^3 + 2*x^2*r + 10/3*x^2 + 2*x*r + 8/3*x + 1/2*r^2 + 3/2*r + 1";

// A polynomial with deg_x <= n and deg_r <= n is pinned down by its values on
// an (n+1) x (n+1) tensor grid, so agreement there is equality.
void check_against_sum(const BiPoly& p, unsigned n) {
    REQUIRE(p.degree_x() <= n);
    REQUIRE(p.degree_r() <= n);
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n; ++j) {
            Rational r = Rational(static_cast<int>(i), 3) - 1;
            Rational x = Rational(static_cast<int>(j), 2) - Rational(3, 4);
            REQUIRE(poly_eval(p, {r, x}) == oracle::d_sum(n, r, x));
        }
}

} // namespace

TEST_CASE("small cases by every route") {
    for (Route route : kAllRoutes) {
        CAPTURE(route_name(route));
        auto seq = d_sequence(route, 4);
        REQUIRE(seq.polys.size() == 5);
        CHECK(seq.route == route);
        CHECK(seq.n_max() == 4);
        CHECK(seq.polys[0].str() == "1");
        CHECK(seq.polys[1].str() == "2*x + 1");
        CHECK(seq.polys[2].str() == kD2);
        CHECK(seq.polys[3].str() == kD3);
        CHECK(seq.polys[4].str() == kD4);
    }
    CHECK(d_direct(2).str() == kD2);
    CHECK(d_newform(3).str() == kD3);
}

TEST_CASE("defining sum oracle pins every route") {
    const unsigned n_max = 9;
    for (Route route : kAllRoutes) {
        CAPTURE(route_name(route));
        auto seq = d_sequence(route, n_max);
        for (unsigned n = 0; n <= n_max; ++n) check_against_sum(seq.polys[n], n);
    }
}

TEST_CASE("routes agree symbolically") {
    const unsigned n_max = 20;
    auto three = d_threeterm(n_max), two = d_twoterm(n_max), series = d_series(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        CAPTURE(n);
        BiPoly direct = d_direct(n);
        CHECK(d_newform(n) == direct);
        CHECK(three.polys[n] == direct);
        CHECK(two.polys[n] == direct);
        CHECK(series.polys[n] == direct);
    }
}

TEST_CASE("structural properties") {
    auto seq = d_threeterm(24);
    for (unsigned n = 0; n <= 24; ++n) {
        CAPTURE(n);
        const BiPoly& d = seq.polys[n];
        CHECK(d.degree_x() == n);
        CHECK(d.coeff(n, 0) == power(Rational(2), static_cast<int>(n)) / Rational(factorial(n)));
        CHECK(poly_subst_affine_x(d, -1, true) * sign_power(n) == d);
        // value at x = 0 is binom(r + [n/2], [n/2])
        CHECK(poly_eval_x(d, 0) == binom_poly(BiPoly::r() + Rational(n / 2), n / 2));
    }
}

TEST_CASE("scalar evaluation") {
    CHECK(d_eval(2, {0, 2}) == Rational(13));
    CHECK(d_eval(0, {Rational(9, 2), 100}) == Rational(1));
    for (unsigned n = 1; n <= 20; ++n)
        CHECK(d_eval(n, {Rational(-1, 2), Rational(1, 2)}) == Rational(2));
    oracle::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Rational r = rng.rational();
        for (unsigned n = 1; n <= 21; n += 2) CHECK(d_eval(n, {r, Rational(-1, 2)}).is_zero());
    }

    CHECK(d_eval(7, {Rational(1, 3), Rational(-2, 5)}) == Rational(8242432, 31640625));
    CHECK(d_eval(12, {Rational(-1, 4), Rational(5, 3)}) ==
          Rational::parse("885811226360723/8463329722368"));

    for (int trial = 0; trial < 40; ++trial) {
        EvalPoint pt{rng.rational(), rng.rational()};
        auto seq = d_eval_sequence(15, pt);
        REQUIRE(seq.size() == 16);
        for (unsigned n = 0; n <= 15; ++n) CHECK(seq[n] == oracle::d_sum(n, pt.r, pt.x));
    }
}

TEST_CASE("Delannoy numbers") {
    CHECK(delannoy_dp(0, 5) == 1);
    CHECK(delannoy_dp(1, 1) == 3);
    CHECK(delannoy_dp(2, 2) == 13);
    auto table = oracle::delannoy_table(20);
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned m = 0; m <= 20; ++m) {
            CHECK(delannoy_dp(n, m) == table[n][m]);
            CHECK(delannoy_dp(n, m) == delannoy_dp(m, n));
        }
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned m = 0; m <= 12; ++m)
            CHECK(d_eval(n, {0, static_cast<int>(m)}) == Rational(table[n][m]));
}

TEST_CASE("route names") {
    for (Route route : kAllRoutes) CHECK(parse_route(route_name(route)) == route);
    CHECK(!parse_route("spline").has_value());
}

TEST_CASE("sequence cache") {
    SequenceCache cache;
    auto a = cache.get(Route::ThreeTerm, 10);
    CHECK(cache.builds() == 1);
    auto b = cache.get(Route::ThreeTerm, 6);
    CHECK(cache.builds() == 1);
    REQUIRE(b->polys.size() == 7);
    for (unsigned n = 0; n <= 6; ++n) CHECK(b->polys[n] == a->polys[n]);
    cache.get(Route::ThreeTerm, 12);
    CHECK(cache.builds() == 2);
    cache.get(Route::Series, 3);
    CHECK(cache.builds() == 3);

    std::vector<std::future<std::shared_ptr<const DSequence>>> jobs;
    for (int i = 0; i < 8; ++i)
        jobs.push_back(std::async(std::launch::async, [&cache] { return cache.get(Route::TwoTerm, 9); }));
    auto first = jobs[0].get();
    for (std::size_t i = 1; i < jobs.size(); ++i) CHECK(jobs[i].get()->polys == first->polys);
    CHECK(first->polys == d_twoterm(9).polys);
}
