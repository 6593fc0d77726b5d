#include "delannoy/special.hpp"

#include <stdexcept>

namespace delannoy {

BiPoly jacobi_eval(unsigned n, const BiPoly& alpha, const BiPoly& beta, const Rational& point) {
    if (alpha.total_degree() > 1 || beta.total_degree() > 1)
        throw std::invalid_argument("Jacobi parameters must be affine in x and r");
    return jacobi_value(n, alpha, beta, point);
}

Rational meixner_eval(unsigned n, const Rational& x, const Rational& b, const Rational& c) {
    return meixner_value(n, x, b, c);
}

BiPoly meixner_poly(unsigned n, const BiPoly& x, const Rational& b, const Rational& c) {
    if (x.total_degree() > 1)
        throw std::invalid_argument("Meixner argument must be affine in x and r");
    return meixner_value(n, x, b, c);
}

} // namespace delannoy
