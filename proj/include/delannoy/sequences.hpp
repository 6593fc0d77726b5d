#pragma once

// The polynomials d_n^(r)(x) = sum_k binom(x+r+k, k) binom(x-r, n-k),
// built by five independent routes, plus the scalar evaluator and the
// Delannoy lattice-path oracle.

#include "delannoy/bipoly.hpp"
#include "delannoy/eval_point.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace delannoy {

enum class Route { Direct, NewForm, ThreeTerm, TwoTerm, Series };

inline constexpr std::array<Route, 5> kAllRoutes{Route::Direct, Route::NewForm,
                                                 Route::ThreeTerm, Route::TwoTerm,
                                                 Route::Series};

std::string_view route_name(Route route);
std::optional<Route> parse_route(std::string_view name);

/// d_0 .. d_{n_max} produced by one route.
struct DSequence {
    Route route = Route::Direct;
    std::vector<BiPoly> polys;

    unsigned n_max() const { return static_cast<unsigned>(polys.size()) - 1; }
};

/// The defining binomial sum.
BiPoly d_direct(unsigned n);
/// sum_k binom(n+2r, n-k) binom(x-r, k) 2^k.
BiPoly d_newform(unsigned n);

/// (n+1) d_{n+1} = (1+2x) d_n + (n+2r) d_{n-1}, seeded with d_0 and d_1.
DSequence d_threeterm(unsigned n_max);
/// (n+1) d_{n+1}(x) = (x+r+n+1) d_n(x) + (-1)^n (x-r) d_n(-x), seeded with d_0.
/// Carries d_n(-x) alongside d_n(x) instead of substituting at every step.
DSequence d_twoterm(unsigned n_max);
/// Coefficients of (1+t)^(x-r) (1-t)^(-(x+r+1)).
DSequence d_series(unsigned n_max);

DSequence d_sequence(Route route, unsigned n_max);

/// Scalar d_n at a point, via the three-term recurrence on rationals.
Rational d_eval(unsigned n, const EvalPoint& at);
/// d_0 .. d_{n_max} at a point.
std::vector<Rational> d_eval_sequence(unsigned n_max, const EvalPoint& at);

/// Lattice paths from (0,0) to (m,n) with steps (0,1), (1,0), (1,1).
Integer delannoy_dp(unsigned n, unsigned m);

/// Session memo of symbolic sequences, keyed by (route, n_max). A request
/// is served from any cached sequence of the same route that is at least
/// as long. Thread-safe.
class SequenceCache {
public:
    std::shared_ptr<const DSequence> get(Route route, unsigned n_max);

    /// Number of sequences actually constructed (cache misses).
    unsigned builds() const;

    static SequenceCache& global();

private:
    mutable std::mutex mutex_;
    std::map<std::pair<Route, unsigned>, std::shared_ptr<const DSequence>> entries_;
    unsigned builds_ = 0;
};

} // namespace delannoy
