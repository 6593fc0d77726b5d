#include "delannoy/series.hpp"

#include <stdexcept>
#include <string>

namespace delannoy {

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    TruncatedSeries out(a.order());
    for (unsigned n = 0; n < a.order(); ++n)
        for (unsigned k = 0; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) continue;
            out[n] += a[k] * b[n - k];
        }
    return out;
}

TruncatedSeries binomial_series(const BiPoly& exponent, int sign, unsigned order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("binomial_series sign must be +-1");
    if (exponent.total_degree() > 1)
        throw std::invalid_argument("binomial_series needs an affine exponent, got " +
                                    exponent.str());
    TruncatedSeries out(order);
    // binom(E, k) built incrementally: binom(E, k) = binom(E, k-1) (E-k+1)/k.
    BiPoly term(1);
    for (unsigned k = 0; k < order; ++k) {
        if (k > 0) {
            term *= exponent - Rational(k - 1);
            term /= Rational(k);
        }
        out[k] = (sign < 0 && k % 2 == 1) ? -term : term;
    }
    return out;
}

} // namespace delannoy
