#pragma once

// Jacobi and Meixner polynomials at the parameters the Delannoy family
// connects to. Both are written once over a scalar type V (Rational or
// BiPoly) so the same formula serves the symbolic and numeric paths.

#include "delannoy/bipoly.hpp"
#include "delannoy/combinatorics.hpp"
#include "delannoy/errors.hpp"

#include <string>

namespace delannoy {

/// P_n^(alpha,beta)(point) = 2^-n sum_k binom(n+alpha, k) binom(n+beta, n-k)
///                           (point+1)^k (point-1)^(n-k).
template <class V>
V jacobi_value(unsigned n, const V& alpha, const V& beta, const Rational& point) {
    V sum{};
    for (unsigned k = 0; k <= n; ++k) {
        Rational weight = power(point + 1, static_cast<int>(k)) *
                          power(point - 1, static_cast<int>(n - k));
        if (weight.is_zero()) continue;
        sum += binom(alpha + Rational(n), k) * binom(beta + Rational(n), n - k) * weight;
    }
    return sum / power(Rational(2), static_cast<int>(n));
}

/// Jacobi polynomial with parameters affine in x and r. Throws
/// std::invalid_argument for non-affine parameters.
BiPoly jacobi_eval(unsigned n, const BiPoly& alpha, const BiPoly& beta, const Rational& point);

/// M_n(x; b, c) = sum_k (-n)_k (-x)_k / ((b)_k k!) (1 - 1/c)^k.
/// Throws std::domain_error for c = 0 and PoleError when (b)_k vanishes
/// for some k <= n.
template <class V>
V meixner_value(unsigned n, const V& x, const Rational& b, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("Meixner parameter c must be nonzero");
    if (b.is_nonpositive_integer() && -b < Rational(n))
        throw PoleError("Meixner pole: (b)_k vanishes for b=" + b.str() +
                        " n=" + std::to_string(n));
    const Rational w = 1 - Rational(1) / c;
    V sum{};
    for (unsigned k = 0; k <= n; ++k) {
        // (-x)_k / k! = (-1)^k binom(x, k)
        Rational scalar = pochhammer(-Rational(n), k) * sign_power(k) *
                          power(w, static_cast<int>(k)) / pochhammer(b, k);
        sum += binom(x, k) * scalar;
    }
    return sum;
}

Rational meixner_eval(unsigned n, const Rational& x, const Rational& b, const Rational& c);

/// Meixner polynomial at an affine polynomial argument.
BiPoly meixner_poly(unsigned n, const BiPoly& x, const Rational& b, const Rational& c);

} // namespace delannoy
