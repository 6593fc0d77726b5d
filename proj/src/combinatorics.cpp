#include "delannoy/combinatorics.hpp"

namespace delannoy {

Integer factorial(unsigned k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

Integer binom_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational falling_factorial(const Rational& z, unsigned k) {
    // Numerators and denominators are multiplied separately and reduced once.
    const Integer& p = z.numerator();
    const Integer& q = z.denominator();
    Integer num = 1;
    Integer den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= p - q * i;
        den *= q;
    }
    return Rational(num, den);
}

Rational binom_gen(const Rational& z, unsigned k) {
    if (z.is_integer() && z.sign() >= 0) {
        Integer n = z.numerator();
        if (n < k) return 0;
        if (n.fits_ulong_p()) {
            Integer out;
            mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
            return out;
        }
    }
    Integer num = 1;
    Integer den = factorial(k);
    const Integer& p = z.numerator();
    const Integer& q = z.denominator();
    for (unsigned i = 0; i < k; ++i) {
        num *= p - q * i;
        den *= q;
    }
    return Rational(num, den);
}

Rational pochhammer(const Rational& a, unsigned k) {
    const Integer& p = a.numerator();
    const Integer& q = a.denominator();
    Integer num = 1;
    Integer den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= p + q * i;
        den *= q;
    }
    return Rational(num, den);
}

} // namespace delannoy
