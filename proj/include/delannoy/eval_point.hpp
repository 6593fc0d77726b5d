#pragma once

#include "delannoy/rational.hpp"

#include <string>

namespace delannoy {

/// A numeric assignment of the parameter r and the variable x.
struct EvalPoint {
    Rational r;
    Rational x;

    /// r in {-1/2, -1, -3/2, ...}: the values where binom(-2r-1, k) and
    /// (2r+1)_k can vanish.
    bool r_is_excluded_half_integers() const {
        Rational twice = r * 2;
        return twice.is_integer() && twice.sign() < 0;
    }

    bool x_is_minus_half() const { return x == Rational(-1, 2); }

    std::string str() const { return "r=" + r.str() + " x=" + x.str(); }

    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

} // namespace delannoy
