#pragma once

// Reference computations that share no code with the library: plain gmpxx
// loops over the textbook definitions.

#include "delannoy/bipoly.hpp"
#include "delannoy/rational.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using delannoy::BiPoly;
using delannoy::Rational;

inline mpq_class to_mpq(const Rational& q) { return q.raw(); }

inline Rational from_mpq(const mpq_class& q) {
    return Rational(delannoy::Integer(q.get_num()), delannoy::Integer(q.get_den()));
}

// z (z-1) ... (z-k+1) / k!
inline mpq_class binom(const mpq_class& z, unsigned k) {
    mpq_class num = 1;
    mpz_class den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= z - i;
        den *= i + 1;
    }
    mpq_class out = num / mpq_class(den);
    out.canonicalize();
    return out;
}

inline std::vector<std::vector<mpz_class>> pascal(unsigned rows) {
    std::vector<std::vector<mpz_class>> t(rows + 1);
    for (unsigned n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

// Full two-dimensional lattice path count.
inline std::vector<std::vector<mpz_class>> delannoy_table(unsigned size) {
    std::vector<std::vector<mpz_class>> t(size + 1, std::vector<mpz_class>(size + 1, 1));
    for (unsigned i = 1; i <= size; ++i)
        for (unsigned j = 1; j <= size; ++j) t[i][j] = t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1];
    return t;
}

// sum_k binom(x+r+k, k) binom(x-r, n-k)
inline mpq_class d_sum(unsigned n, const mpq_class& r, const mpq_class& x) {
    mpq_class s = 0;
    for (unsigned k = 0; k <= n; ++k) s += binom(x + r + k, k) * binom(x - r, n - k);
    return s;
}

inline Rational d_sum(unsigned n, const Rational& r, const Rational& x) {
    return from_mpq(d_sum(n, to_mpq(r), to_mpq(x)));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    Rational rational(int span = 12, int max_den = 9) {
        return Rational(integer(-span, span), integer(1, max_den));
    }

    BiPoly poly(unsigned max_deg = 3, unsigned terms = 4) {
        BiPoly p;
        for (unsigned i = 0; i < terms; ++i)
            p += BiPoly::monomial(rational(), integer(0, max_deg), integer(0, max_deg));
        return p;
    }

    BiPoly affine() {
        return BiPoly::x() * rational(3, 3) + BiPoly::r() * rational(3, 3) + rational();
    }

private:
    std::mt19937_64 engine_;
};

} // namespace oracle
