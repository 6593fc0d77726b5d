#pragma once

// Sparse polynomials in the two formal variables x and r with exact
// rational coefficients.

#include "delannoy/eval_point.hpp"
#include "delannoy/rational.hpp"

#include <compare>
#include <map>
#include <ostream>
#include <string>

namespace delannoy {

struct Monomial {
    unsigned x = 0;
    unsigned r = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending x degree, then descending r degree.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.x != b.x ? a.x > b.x : a.r > b.r;
    }
};

class BiPoly {
public:
    using Terms = std::map<Monomial, Rational, CanonicalOrder>;

    BiPoly() = default;
    BiPoly(const Rational& c);
    template <std::integral T>
    BiPoly(T c) : BiPoly(Rational(c)) {}

    static BiPoly x();
    static BiPoly r();
    static BiPoly monomial(const Rational& c, unsigned deg_x, unsigned deg_r);

    /// Never contains zero coefficients.
    const Terms& terms() const { return terms_; }
    Rational coeff(unsigned deg_x, unsigned deg_r) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant value; throws std::logic_error if not constant.
    Rational constant_value() const;

    unsigned degree_x() const;
    unsigned degree_r() const;
    unsigned total_degree() const;
    std::size_t size() const { return terms_.size(); }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    BiPoly& operator/=(const Rational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    template <std::integral T>
    friend BiPoly operator*(BiPoly a, T c) { return a *= Rational(c); }
    template <std::integral T>
    friend BiPoly operator*(T c, BiPoly a) { return a *= Rational(c); }
    friend BiPoly operator/(BiPoly a, const Rational& c) { return a /= c; }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Canonical text, e.g. "2*x^2 + 2*x + r + 1". Stable and bit-exact.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

BiPoly power(const BiPoly& base, unsigned exponent);

Rational poly_eval(const BiPoly& p, const EvalPoint& at);

/// x -> -x.
BiPoly poly_subst_neg_x(const BiPoly& p);
/// x -> shift + x, or shift - x when negate is set.
BiPoly poly_subst_affine_x(const BiPoly& p, const Rational& shift, bool negate);
/// r -> r + shift.
BiPoly poly_subst_affine_r(const BiPoly& p, const Rational& shift);
/// x -> scale*x + shift for any rational scale (scale 0 substitutes a value).
BiPoly poly_subst_x(const BiPoly& p, const Rational& scale, const Rational& shift);
/// r -> scale*r + shift.
BiPoly poly_subst_r(const BiPoly& p, const Rational& scale, const Rational& shift);

/// Partial evaluation: a polynomial in r only.
inline BiPoly poly_eval_x(const BiPoly& p, const Rational& x) { return poly_subst_x(p, 0, x); }
/// Partial evaluation: a polynomial in x only.
inline BiPoly poly_eval_r(const BiPoly& p, const Rational& r) { return poly_subst_r(p, 0, r); }

/// binom(L, k) = L(L-1)...(L-k+1)/k! for an affine L in x and r.
/// Throws std::invalid_argument if L has total degree above one.
BiPoly binom_poly(const BiPoly& linear, unsigned k);

/// Overload companion of binom(const Rational&, unsigned).
inline BiPoly binom(const BiPoly& linear, unsigned k) { return binom_poly(linear, k); }

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

} // namespace delannoy
