#pragma once

// Every identity as a (lhs, rhs) pair, written once over a backend. Forms
// with r-dependent denominators are stated with those denominators cleared
// by the explicit product of linear factors, so both sides are polynomial.

#include "backends.hpp"

#include "delannoy/combinatorics.hpp"
#include "delannoy/special.hpp"

#include <string>
#include <vector>

namespace delannoy::detail {

template <class V>
struct Check {
    std::string identity;
    std::string params;
    V lhs;
    V rhs;
    std::string skip_reason;  ///< non-empty: not applicable at this point
};

template <class V>
using Checks = std::vector<Check<V>>;

inline std::string n_param(unsigned n) { return "n=" + std::to_string(n); }

inline bool not_excluded_half(const Rational& r) {
    return !EvalPoint{r, 0}.r_is_excluded_half_integers();
}

inline constexpr const char* kExcludedHalfReason =
    "r in {-1/2, -1, -3/2, ...}: binom(-2r-1, k) has a vanishing factor";

/// prod_{j=from}^{to} (2r + j); 1 when from > to.
template <class B>
auto shifted_2r_product(const B& be, unsigned from, unsigned to) {
    using V = typename B::value_type;
    V out{Rational(1)};
    for (unsigned j = from; j <= to; ++j) out *= be.r() * 2 + Rational(j);
    return out;
}

template <class V>
void add_check(Checks<V>& out, std::string id, std::string params, V lhs, V rhs,
               bool applicable = true, std::string reason = {}) {
    if (!applicable) {
        out.push_back({std::move(id), std::move(params), V{}, V{}, std::move(reason)});
        return;
    }
    out.push_back({std::move(id), std::move(params), std::move(lhs), std::move(rhs), {}});
}

// d_n^2 (2r+1)...(2r+n)
//   = binom(n+2r, n) sum_k binom(x-r,k) binom(x+r+k,k) binom(n+2r+k, n-k) 4^k
//                         k! (2r+k+1)...(2r+n)
template <class B>
auto square_formula(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V x = be.x(), r = be.r();
    bool ok = be.admits_r(not_excluded_half);
    if (!ok) {
        add_check<V>(out, "square-formula", n_param(n), {}, {}, false, kExcludedHalfReason);
        return out;
    }
    V dn = be.d(n);
    V lhs = dn * dn * shifted_2r_product(be, 1, n);
    V sum{};
    for (unsigned k = 0; k <= n; ++k) {
        Rational scalar = power(Rational(4), static_cast<int>(k)) * Rational(factorial(k));
        sum += binom(x - r, k) * binom(x + r + Rational(k), k) *
               binom(r * 2 + Rational(n + k), n - k) * shifted_2r_product(be, k + 1, n) * scalar;
    }
    V rhs = binom(r * 2 + Rational(n), n) * sum;
    add_check<V>(out, "square-formula", n_param(n), lhs, rhs);
    return out;
}

// d_m d_n = sum_k binom(m+n-2k, m-k) binom(2r+m+n-k, k) (-1)^k d_{m+n-2k}
template <class B>
auto linearization(const B& be, unsigned m, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V r = be.r();
    V rhs{};
    for (unsigned k = 0; k <= std::min(m, n); ++k) {
        Rational outer = Rational(binom_int(m + n - 2 * k, m - k)) * sign_power(k);
        rhs += binom(r * 2 + Rational(m + n - k), k) * be.d(m + n - 2 * k) * outer;
    }
    add_check<V>(out, "linearization", "m=" + std::to_string(m) + " " + n_param(n),
                 be.d(m) * be.d(n), rhs);
    return out;
}

// Binomial-inversion consequences of the new closed form. Each side is
// multiplied by (2r+1)...(2r+n); the reciprocal 1/binom(-2r-1, k) then
// becomes (-1)^k k! (2r+k+1)...(2r+n).
template <class B>
auto inversion_sums(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V x = be.x(), r = be.r();
    const std::string params = n_param(n);
    if (!be.admits_r(not_excluded_half)) {
        for (const char* id : {"closed-form-inverted", "inversion-sum", "inversion-sum-even",
                               "inversion-sum-odd"})
            add_check<V>(out, id, params, {}, {}, false, kExcludedHalfReason);
        return out;
    }
    auto cleared_reciprocal = [&](unsigned k) {
        return shifted_2r_product(be, k + 1, n) * (Rational(factorial(k)) * sign_power(k));
    };
    auto two_pow = [](int e) { return power(Rational(2), e); };

    V inverted{};
    V inversion{};
    V even{};
    V odd{};
    for (unsigned k = 0; k <= n; ++k) {
        const Rational choose(binom_int(n, k));
        inverted += binom(x - r, k) * cleared_reciprocal(k) *
                    (choose * sign_power(k) * two_pow(static_cast<int>(k)));
        V term = be.d(k) * cleared_reciprocal(k) * choose;
        inversion += term;
        (k % 2 == 0 ? even : odd) += term;
    }
    const V top_reciprocal = cleared_reciprocal(n);
    add_check<V>(out, "closed-form-inverted", params,
                 be.d(n) * top_reciprocal * sign_power(n), inverted);
    add_check<V>(out, "inversion-sum", params, inversion,
                 binom(x - r, n) * top_reciprocal * two_pow(static_cast<int>(n)));
    const V plus = binom(x - r, n);
    const V minus = binom(-x - r - Rational(1), n);
    const Rational half_power = two_pow(static_cast<int>(n) - 1);
    add_check<V>(out, "inversion-sum-even", params, even,
                 (plus + minus) * top_reciprocal * half_power);
    add_check<V>(out, "inversion-sum-odd", params, odd,
                 (plus - minus) * top_reciprocal * half_power);
    return out;
}

// d_n = P_n^(x-r-n, 2r)(3) = (-1)^n P_n^(2r, x-r-n)(-3) = P_n^(2r, -1-x-r-n)(-3)
template <class B>
auto jacobi_connection(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V x = be.x(), r = be.r();
    const std::string params = n_param(n);
    const V dn = be.d(n);
    const V alpha = x - r - Rational(n);
    const V two_r = r * 2;
    add_check<V>(out, "jacobi-at-3", params, dn, jacobi_value(n, alpha, two_r, Rational(3)));
    add_check<V>(out, "jacobi-at-minus-3-swapped", params, dn,
                 jacobi_value(n, two_r, alpha, Rational(-3)) * sign_power(n));
    add_check<V>(out, "jacobi-at-minus-3-reflected", params, dn,
                 jacobi_value(n, two_r, -x - r - Rational(n + 1), Rational(-3)));
    return out;
}

// d_n = (2r+1)_n/n! M_n(x-r; 2r+1, -1) and, with b = 2r+1,
// d_n^((b-1)/2)(x + (b-1)/2) = binom(b+n-1, n) M_n(x; b, -1). Needs r fixed.
template <class B>
auto meixner_connection(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const std::string params = n_param(n);
    const Rational& r0 = be.fixed_r();
    if (!not_excluded_half(r0)) {
        add_check<V>(out, "meixner-connection", params, {}, {}, false,
                     "(2r+1)_k vanishes for r in {-1/2, -1, ...}");
        add_check<V>(out, "meixner-shifted", params, {}, {}, false,
                     "(2r+1)_k vanishes for r in {-1/2, -1, ...}");
        return out;
    }
    const Rational b = 2 * r0 + 1;
    const V x = be.x();
    const Rational pre = pochhammer(b, n) / Rational(factorial(n));
    add_check<V>(out, "meixner-connection", params, be.d(n),
                 meixner_value(n, V(x - r0), b, Rational(-1)) * pre);
    add_check<V>(out, "meixner-shifted", params, be.d_at(n, XMap{1, r0}),
                 meixner_value(n, x, b, Rational(-1)) * binom_gen(b + n - 1, n));
    return out;
}

// Three-term recurrence, two-term recurrence, and the backward companion
// (n+2r) d_{n-1}(x) = (n+r-x) d_n(x) + (-1)^n (x-r) d_n(-x).
template <class B>
auto recurrences(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V x = be.x(), r = be.r();
    const std::string params = n_param(n);
    const V dn = be.d(n);
    const V dnext = be.d(n + 1);
    const V dprev = n == 0 ? V{} : be.d(n - 1);
    const V dn_neg = be.d_at(n, kNegX);
    const int s = sign_power(n);
    add_check<V>(out, "three-term", params, dnext * Rational(n + 1),
                 (x * 2 + Rational(1)) * dn + (r * 2 + Rational(n)) * dprev);
    add_check<V>(out, "two-term", params, dnext * Rational(n + 1),
                 (x + r + Rational(n + 1)) * dn + (x - r) * dn_neg * s);
    add_check<V>(out, "two-term-backward", params, (r * 2 + Rational(n)) * dprev,
                 (r - x + Rational(n)) * dn + (x - r) * dn_neg * s);
    return out;
}

// Closed forms of d_n at x = -1/2, -1, 0, 1/2, 1, 3/2, 2 as polynomials in r.
template <class B>
auto special_values(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V r = be.r();
    const std::string params = n_param(n);
    const int s = sign_power(n);
    const unsigned h = n / 2;
    const Rational half(1, 2);

    {
        V rhs = n % 2 == 1 ? V{} : binom(-r - half, h) * sign_power(h);
        add_check<V>(out, "value-at-minus-half", params, be.d_at(n, x_value(-half)), rhs);
    }
    const V binom_h = binom(r + Rational(h), h);
    add_check<V>(out, "value-at-zero", params, be.d_at(n, x_value(0)), binom_h);
    add_check<V>(out, "value-at-minus-one", params, be.d_at(n, x_value(-1)), binom_h * s);

    if (n >= 1) {
        const Rational three_half(3, 2);
        V rhs = n % 2 == 1
                    ? binom(-r - three_half, (n - 1) / 2) * (2 * sign_power((n - 1) / 2))
                    : (r * 2 + Rational(2 * n + 1)) / Rational(n) *
                          binom(-r - three_half, h - 1) * sign_power(h - 1);
        add_check<V>(out, "value-at-half", params, be.d_at(n, x_value(half)), rhs);
        add_check<V>(out, "value-at-half-r-minus-half", params,
                     V{be.d_fixed(n, EvalPoint{-half, half})}, V{Rational(2)});
    }

    add_check<V>(out, "value-at-one", params, (r + Rational(1)) * be.d_at(n, x_value(1)),
                 (r * (2 - s) + Rational(2 * n + 1)) * binom_h,
                 be.admits_r([](const Rational& v) { return v != -1; }),
                 "r = -1: denominator r+1 vanishes");

    if (n >= 1) {
        const unsigned hp = (n + 1) / 2;
        const unsigned m = (n - 1) / 2;
        const V lhs = be.d_at(n, x_value(Rational(3, 2))) * (r * 2 + Rational(3)) *
                      Rational(6 * hp);
        const V first = (r * 2 - Rational(1)) * (2 + s) + Rational(4 * n + 6);
        const V second = (r * 2 + Rational(1)) * (2 + s) + Rational(4 * n - 2);
        const V rhs = (first * (r * 2 + Rational(3)) * Rational(n + 1) -
                       (r * 2 - Rational(3)) * second * Rational(2 * hp)) *
                      binom(r + half + Rational(m), m);
        add_check<V>(out, "value-at-three-halves", params, lhs, rhs,
                     be.admits_r([](const Rational& v) { return v != -1 && v != Rational(-3, 2); }),
                     "r in {-1, -3/2}: denominators r+1 and 2r+3 vanish");
    }

    {
        const Rational nn(n);
        const V quad = r * r * (3 - 2 * s) + r * ((4 - s) * (2 * nn + 1)) +
                       V{4 * nn * nn + 4 * nn + 2};
        add_check<V>(out, "value-at-two", params,
                     (r + Rational(1)) * (r + Rational(2)) * be.d_at(n, x_value(2)),
                     quad * binom_h,
                     be.admits_r([](const Rational& v) { return v != -1 && v != -2; }),
                     "r in {-1, -2}: denominators r+1 and r+2 vanish");
    }
    return out;
}

// Half-step shifts in r and x, and the x -> 1-x reflection.
template <class B>
auto shift_identities(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V x = be.x(), r = be.r();
    const std::string params = n_param(n);
    const Rational half(1, 2);
    const int s = sign_power(n);
    const V dn = be.d(n);
    const V dn_neg = be.d_at(n, kNegX);
    const XMap x_minus_half{1, -half};

    if (n >= 1) {
        const V up = be.d_at(n - 1, x_minus_half, half);
        const V down = be.d_at(n + 1, x_minus_half, -half);
        add_check<V>(out, "half-shift-odd-part", params, up * 2, dn - dn_neg * s);
        add_check<V>(out, "half-shift-down", params, down * Rational(n + 1),
                     (x + r) * dn + (x - r) * dn_neg * s);
        add_check<V>(out, "half-shift-combined", params,
                     (x - r) * up * 2 + down * Rational(n + 1), x * dn * 2);
    }
    add_check<V>(out, "one-minus-x-reflection", params,
                 (x - r - Rational(1)) * be.d_at(n, XMap{-1, 1}),
                 (x + r) * dn * s - (r * 2 + Rational(2 * n + 1)) * dn_neg);
    return out;
}

// (1+2x) sum_{k<n} [(2r+k+1)...(2r+n) / ((k+1)...n)] d_k^2 = (n+2r) d_n d_{n-1}
template <class B>
auto weighted_square_sum(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    if (n == 0) return out;
    const V x = be.x(), r = be.r();
    V sum{};
    for (unsigned k = 0; k < n; ++k) {
        const Rational weight = Rational(factorial(k)) / Rational(factorial(n));
        const V dk = be.d(k);
        sum += shifted_2r_product(be, k + 1, n) * dk * dk * weight;
    }
    add_check<V>(out, "weighted-square-sum", n_param(n), (x * 2 + Rational(1)) * sum,
                 (r * 2 + Rational(n)) * be.d(n) * be.d(n - 1));
    return out;
}

// (sum_k binom(n,k) binom(x,k)/binom(a,k) (-2)^k)^2
//   = (-1)^n / binom(a,n) sum_k binom(x,k) binom(a-x,k) binom(n+k-a-1, n-k)/binom(a,k) 4^k
template <class B>
auto guo_square(const B& be, unsigned n, const Rational& a) {
    using V = typename B::value_type;
    Checks<V> out;
    const std::string params = n_param(n) + " a=" + a.str();
    if (a.is_integer() && a.sign() >= 0) {
        add_check<V>(out, "guo-square", params, {}, {}, false, "a in {0, 1, 2, ...}");
        return out;
    }
    const V x = be.x();
    V inner{};
    V rhs{};
    for (unsigned k = 0; k <= n; ++k) {
        const Rational ba = binom_gen(a, k);
        inner += binom(x, k) * (Rational(binom_int(n, k)) * power(Rational(-2), k) / ba);
        rhs += binom(x, k) * binom(V(Rational(a)) - x, k) *
               (binom_gen(Rational(n + k) - a - 1, n - k) * power(Rational(4), k) / ba);
    }
    add_check<V>(out, "guo-square", params, inner * inner,
                 rhs * (Rational(sign_power(n)) / binom_gen(a, n)));
    return out;
}

/// Right-hand side shared by the b-form of the Guo square and the Meixner
/// square: 1/binom(b+n-1,n) sum_k binom(x,k) binom(x+b-1+k,k)
/// binom(n+k+b-1,n-k) / binom(b-1+k,k) 4^k.
template <class V>
V meixner_square_rhs(const V& x, unsigned n, const Rational& b) {
    V sum{};
    for (unsigned k = 0; k <= n; ++k)
        sum += binom(x, k) * binom(x + (b - 1 + k), k) *
               (binom_gen(b + (n + k) - 1, n - k) * power(Rational(4), k) /
                binom_gen(b - 1 + k, k));
    return sum / binom_gen(b + n - 1, n);
}

// b-parametrized square formula, and the Meixner square both through M_n
// directly and through d_n^((b-1)/2)(x+(b-1)/2). Needs r fixed to (b-1)/2.
template <class B>
auto meixner_square(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const Rational b = be.fixed_r() * 2 + 1;
    const std::string params = n_param(n) + " b=" + b.str();
    if (b.is_nonpositive_integer()) {
        for (const char* id : {"guo-square-b", "meixner-square", "meixner-square-via-d"})
            add_check<V>(out, id, params, {}, {}, false, "b in {0, -1, -2, ...}");
        return out;
    }
    const V x = be.x();
    const V rhs = meixner_square_rhs(x, n, b);
    V inner{};
    for (unsigned k = 0; k <= n; ++k)
        inner += binom(x, k) * (Rational(binom_int(n, k)) * power(Rational(2), k) /
                                binom_gen(b - 1 + k, k));
    add_check<V>(out, "guo-square-b", params, inner * inner, rhs);
    const V m = meixner_value(n, x, b, Rational(-1));
    add_check<V>(out, "meixner-square", params, m * m, rhs);
    const V shifted = be.d_at(n, XMap{1, be.fixed_r()}) / binom_gen(b + n - 1, n);
    add_check<V>(out, "meixner-square-via-d", params, shifted * shifted, rhs);
    return out;
}

// The x = -1 specialization of the Guo square:
// (sum_k binom(n,k)/binom(a,k) 2^k)^2
//   = 1/binom(a,n) sum_k (-1)^(n-k) (a+1)/(a+1-k) binom(n+k-a-1, n-k) 4^k.
template <class B>
auto guo_at_minus_one(const B&, unsigned n, const Rational& a) {
    using V = typename B::value_type;
    Checks<V> out;
    const std::string params = n_param(n) + " a=" + a.str();
    if (a.is_integer() && a >= Rational(-1)) {
        add_check<V>(out, "guo-at-x-minus-one", params, {}, {}, false,
                     "a in {-1, 0, 1, ...}: (a+1)/(a+1-k) or binom(a,k) degenerates");
        return out;
    }
    Rational inner;
    Rational rhs;
    for (unsigned k = 0; k <= n; ++k) {
        inner += Rational(binom_int(n, k)) / binom_gen(a, k) * power(Rational(2), k);
        rhs += Rational(sign_power(n - k)) * (a + 1) / (a + 1 - k) *
               binom_gen(Rational(n + k) - a - 1, n - k) * power(Rational(4), k);
    }
    add_check<V>(out, "guo-at-x-minus-one", params, V{inner * inner},
                 V{rhs / binom_gen(a, n)});
    return out;
}

// The a = -1/2 case in central-binomial form.
template <class B>
auto guo_central_binomial(const B&, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    Rational inner;
    Rational rhs;
    for (unsigned k = 0; k <= n; ++k) {
        inner += Rational(binom_int(n, k)) / Rational(binom_int(2 * k, k)) *
                 power(Rational(-8), k);
        rhs += Rational(sign_power(k)) / Rational(1 - 2 * static_cast<int>(k)) *
               binom_gen(Rational(n + k) - Rational(1, 2), n - k) *
               power(Rational(4), n + k);
    }
    add_check<V>(out, "guo-central-binomial", n_param(n), V{inner * inner},
                 V{rhs / Rational(binom_int(2 * n, n))});
    return out;
}

// The a = -2 case: (sum_k binom(n,k) binom(x,k) 2^k/(k+1))^2
//   = 1/(n+1) sum_k binom(x,k) binom(-2-x,k) binom(n+k+1, 2k+1) (-4)^k/(k+1).
template <class B>
auto guo_at_minus_two(const B& be, unsigned n) {
    using V = typename B::value_type;
    Checks<V> out;
    const V x = be.x();
    V inner{};
    V rhs{};
    for (unsigned k = 0; k <= n; ++k) {
        inner += binom(x, k) * (Rational(binom_int(n, k)) * power(Rational(2), k) / (k + 1));
        rhs += binom(x, k) * binom(-x - Rational(2), k) *
               (Rational(binom_int(n + k + 1, 2 * k + 1)) * power(Rational(-4), k) / (k + 1));
    }
    add_check<V>(out, "guo-at-a-minus-two", n_param(n), inner * inner,
                 rhs / Rational(n + 1));
    return out;
}

} // namespace delannoy::detail
