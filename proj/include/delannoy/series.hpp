#pragma once

#include "delannoy/bipoly.hpp"

#include <vector>

namespace delannoy {

/// Formal power series in t with BiPoly coefficients, keeping the
/// coefficients of t^0 .. t^(order-1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order) : coeffs_(order) {}
    explicit TruncatedSeries(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
    const BiPoly& operator[](unsigned k) const { return coeffs_.at(k); }
    BiPoly& operator[](unsigned k) { return coeffs_.at(k); }
    const std::vector<BiPoly>& coefficients() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BiPoly> coeffs_;
};

/// Cauchy product truncated at the common order. Throws
/// std::invalid_argument when the orders differ.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

/// (1 + sign*t)^exponent = sum_k binom(exponent, k) (sign*t)^k for an
/// affine exponent. sign must be +1 or -1.
TruncatedSeries binomial_series(const BiPoly& exponent, int sign, unsigned order);

} // namespace delannoy
