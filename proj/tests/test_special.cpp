#include "delannoy/errors.hpp"
#include "delannoy/special.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace delannoy;

namespace {

// (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-t)/2), with the
// ratio (alpha+1)_n/(alpha+1)_k expanded as a plain product.
mpq_class jacobi_hyper(unsigned n, const mpq_class& alpha, const mpq_class& beta, const mpq_class& t) {
    mpq_class sum = 0;
    const mpq_class w = (1 - t) / 2;
    for (unsigned k = 0; k <= n; ++k) {
        mpq_class term = 1;
        for (unsigned i = 0; i < k; ++i) term *= mpq_class(-static_cast<int>(n) + static_cast<int>(i)) * (alpha + beta + n + 1 + i) * w / (i + 1);
        for (unsigned i = k; i < n; ++i) term *= alpha + 1 + i;
        sum += term;
    }
    mpz_class nf = 1;
    for (unsigned i = 2; i <= n; ++i) nf *= i;
    return sum / mpq_class(nf);
}

} // namespace

TEST_CASE("Jacobi polynomials") {
    const BiPoly X = BiPoly::x(), R = BiPoly::r();
    CHECK(jacobi_eval(0, X, R, 5) == BiPoly(1));
    CHECK(jacobi_eval(1, X - R - 1, 2 * R, 3).str() == "2*x + 1");
    CHECK(jacobi_eval(1, BiPoly(0), BiPoly(0), 3) == BiPoly(3));
    CHECK_THROWS_AS(jacobi_eval(2, X * X, R, 3), std::invalid_argument);

    // Legendre: (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}
    for (Rational t : {Rational(3), Rational(-1, 2), Rational(2, 7)}) {
        Rational prev = 1, cur = t;
        for (unsigned n = 1; n <= 15; ++n) {
            CHECK(jacobi_value<Rational>(n, 0, 0, t) == cur);
            Rational next = (Rational(2 * n + 1) * t * cur - Rational(n) * prev) / (n + 1);
            prev = cur;
            cur = next;
        }
    }

    oracle::Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned n = rng.integer(0, 9);
        Rational a = rng.rational(), b = rng.rational(), t = rng.rational(4, 5);
        CHECK(jacobi_value<Rational>(n, a, b, t) ==
              oracle::from_mpq(jacobi_hyper(n, a.raw(), b.raw(), t.raw())));
        EvalPoint pt{rng.rational(), rng.rational()};
        BiPoly alpha = X - R + a, beta = 2 * R + b;
        CHECK(poly_eval(jacobi_eval(n, alpha, beta, t), pt) ==
              jacobi_value<Rational>(n, poly_eval(alpha, pt), poly_eval(beta, pt), t));
    }
}

TEST_CASE("Meixner polynomials") {
    CHECK(meixner_eval(0, 4, 2, 3) == Rational(1));
    // M_1(x; b, -1) = 1 + 2x/b
    CHECK(meixner_eval(1, 1, 1, -1) == Rational(3));
    CHECK(meixner_eval(1, 3, 2, -1) == Rational(4));
    CHECK(meixner_eval(1, Rational(-1, 2), Rational(1, 3), -1) == Rational(-2));
    CHECK_THROWS_AS(meixner_eval(2, 1, 1, 0), std::domain_error);
    CHECK_THROWS_AS(meixner_eval(3, 1, -1, 2), PoleError);
    CHECK_NOTHROW(meixner_eval(1, 1, -1, 2));
    CHECK_THROWS_AS(meixner_poly(2, BiPoly::x() * BiPoly::x(), 1, 2), std::invalid_argument);

    // c(n+b) M_{n+1} = [(c-1)x + n + (n+b)c] M_n - n M_{n-1}
    oracle::Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        Rational x = rng.rational(), b = rng.rational(9, 7), c = rng.rational(5, 4);
        if (c.is_zero() || b.is_nonpositive_integer()) continue;
        for (unsigned n = 1; n <= 10; ++n) {
            Rational lhs = c * (b + n) * meixner_eval(n + 1, x, b, c);
            Rational rhs = ((c - 1) * x + n + (b + n) * c) * meixner_eval(n, x, b, c) -
                           Rational(n) * meixner_eval(n - 1, x, b, c);
            CHECK(lhs == rhs);
        }
        const BiPoly shifted = BiPoly::x() * 2 - 1;
        EvalPoint pt{0, rng.rational()};
        CHECK(poly_eval(meixner_poly(6, shifted, b, c), pt) ==
              meixner_eval(6, 2 * pt.x - 1, b, c));
    }
}
