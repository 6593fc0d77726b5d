#pragma once

// Exact rational scalars. Every value in the library lives in this field;
// there is no floating point anywhere.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace delannoy {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}

    Rational(const Integer& v) : value_(v) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits only.
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// True for 0, -1, -2, ...
    bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

    /// Canonical "p" or "p/q" text.
    std::string str() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

/// base^exponent; negative exponents require a nonzero base.
Rational power(const Rational& base, int exponent);
inline Rational power(const Rational& base, unsigned exponent) {
    return power(base, static_cast<int>(exponent));
}

/// (-1)^n
inline int sign_power(unsigned n) { return n % 2 == 0 ? 1 : -1; }

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace delannoy
