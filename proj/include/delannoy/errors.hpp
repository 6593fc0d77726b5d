#pragma once

#include <stdexcept>

namespace delannoy {

/// A denominator Pochhammer symbol vanishes before the series terminates.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace delannoy
