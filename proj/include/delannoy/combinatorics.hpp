#pragma once

#include "delannoy/rational.hpp"

namespace delannoy {

Integer factorial(unsigned k);

/// Ordinary binomial coefficient; zero when k > n.
Integer binom_int(unsigned n, unsigned k);

/// Generalized binomial coefficient z(z-1)...(z-k+1)/k! for rational z.
/// The k-term product is formed first and divided by k! once.
Rational binom_gen(const Rational& z, unsigned k);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

/// Falling factorial z(z-1)...(z-k+1).
Rational falling_factorial(const Rational& z, unsigned k);

/// Overload so identity code can be written once over Rational and BiPoly.
inline Rational binom(const Rational& z, unsigned k) { return binom_gen(z, k); }

} // namespace delannoy
