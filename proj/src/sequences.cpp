#include "delannoy/sequences.hpp"

#include "delannoy/series.hpp"

#include <stdexcept>

namespace delannoy {

std::string_view route_name(Route route) {
    switch (route) {
    case Route::Direct: return "direct";
    case Route::NewForm: return "newform";
    case Route::ThreeTerm: return "threeterm";
    case Route::TwoTerm: return "twoterm";
    case Route::Series: return "series";
    }
    return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
    for (Route r : kAllRoutes)
        if (route_name(r) == name) return r;
    return std::nullopt;
}

BiPoly d_direct(unsigned n) {
    const BiPoly x = BiPoly::x();
    const BiPoly r = BiPoly::r();
    const BiPoly x_minus_r = x - r;
    BiPoly sum;
    for (unsigned k = 0; k <= n; ++k)
        sum += binom_poly(x + r + Rational(k), k) * binom_poly(x_minus_r, n - k);
    return sum;
}

BiPoly d_newform(unsigned n) {
    const BiPoly x = BiPoly::x();
    const BiPoly r = BiPoly::r();
    const BiPoly top = 2 * r + Rational(n);
    BiPoly sum;
    BiPoly binom_x_minus_r(1);
    Rational two_k(1);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            binom_x_minus_r *= x - r - Rational(k - 1);
            binom_x_minus_r /= Rational(k);
            two_k *= 2;
        }
        sum += binom_poly(top, n - k) * binom_x_minus_r * two_k;
    }
    return sum;
}

DSequence d_threeterm(unsigned n_max) {
    const BiPoly x = BiPoly::x();
    const BiPoly r = BiPoly::r();
    DSequence seq{Route::ThreeTerm, {BiPoly(1)}};
    if (n_max >= 1) seq.polys.push_back(1 + 2 * x);
    const BiPoly one_plus_2x = 1 + 2 * x;
    for (unsigned n = 1; n < n_max; ++n) {
        BiPoly next = one_plus_2x * seq.polys[n] + (Rational(n) + 2 * r) * seq.polys[n - 1];
        seq.polys.push_back(next / Rational(n + 1));
    }
    return seq;
}

DSequence d_twoterm(unsigned n_max) {
    const BiPoly x = BiPoly::x();
    const BiPoly r = BiPoly::r();
    DSequence seq{Route::TwoTerm, {BiPoly(1)}};
    BiPoly at_x(1);
    BiPoly at_neg_x(1);
    for (unsigned n = 0; n < n_max; ++n) {
        const int s = sign_power(n);
        BiPoly next = (x + r + Rational(n + 1)) * at_x + s * ((x - r) * at_neg_x);
        BiPoly next_neg = (r - x + Rational(n + 1)) * at_neg_x - s * ((x + r) * at_x);
        at_x = next / Rational(n + 1);
        at_neg_x = next_neg / Rational(n + 1);
        seq.polys.push_back(at_x);
    }
    return seq;
}

DSequence d_series(unsigned n_max) {
    const BiPoly x = BiPoly::x();
    const BiPoly r = BiPoly::r();
    auto numerator = binomial_series(x - r, +1, n_max + 1);
    auto denominator = binomial_series(-(x + r + 1), -1, n_max + 1);
    auto product = series_mul(numerator, denominator);
    return DSequence{Route::Series, product.coefficients()};
}

DSequence d_sequence(Route route, unsigned n_max) {
    switch (route) {
    case Route::ThreeTerm: return d_threeterm(n_max);
    case Route::TwoTerm: return d_twoterm(n_max);
    case Route::Series: return d_series(n_max);
    case Route::Direct:
    case Route::NewForm: {
        DSequence seq{route, {}};
        for (unsigned n = 0; n <= n_max; ++n)
            seq.polys.push_back(route == Route::Direct ? d_direct(n) : d_newform(n));
        return seq;
    }
    }
    throw std::invalid_argument("unknown route");
}

std::vector<Rational> d_eval_sequence(unsigned n_max, const EvalPoint& at) {
    std::vector<Rational> d{Rational(1)};
    d.reserve(n_max + 1);
    const Rational one_plus_2x = 1 + 2 * at.x;
    if (n_max >= 1) d.push_back(one_plus_2x);
    for (unsigned n = 1; n < n_max; ++n)
        d.push_back((one_plus_2x * d[n] + (n + 2 * at.r) * d[n - 1]) / Rational(n + 1));
    return d;
}

Rational d_eval(unsigned n, const EvalPoint& at) { return d_eval_sequence(n, at)[n]; }

Integer delannoy_dp(unsigned n, unsigned m) {
    // Rolling row over j = 0..m.
    std::vector<Integer> row(m + 1, Integer(1));
    for (unsigned i = 1; i <= n; ++i) {
        Integer diag = row[0];
        for (unsigned j = 1; j <= m; ++j) {
            Integer up = row[j];
            row[j] = row[j] + row[j - 1] + diag;
            diag = up;
        }
    }
    return row[m];
}

std::shared_ptr<const DSequence> SequenceCache::get(Route route, unsigned n_max) {
    {
        std::lock_guard lock(mutex_);
        auto exact = entries_.find({route, n_max});
        if (exact != entries_.end()) return exact->second;
        // Any longer sequence of the same route serves as a prefix.
        for (auto it = entries_.lower_bound({route, n_max});
             it != entries_.end() && it->first.first == route; ++it) {
            auto trimmed = std::make_shared<DSequence>(*it->second);
            trimmed->polys.resize(n_max + 1);
            entries_.emplace(std::pair{route, n_max}, trimmed);
            return trimmed;
        }
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    auto built = std::make_shared<const DSequence>(d_sequence(route, n_max));
    std::lock_guard lock(mutex_);
    ++builds_;
    auto [it, inserted] = entries_.emplace(std::pair{route, n_max}, built);
    return it->second;
}

unsigned SequenceCache::builds() const {
    std::lock_guard lock(mutex_);
    return builds_;
}

SequenceCache& SequenceCache::global() {
    static SequenceCache cache;
    return cache;
}

} // namespace delannoy
