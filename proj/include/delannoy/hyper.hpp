#pragma once

// Terminating generalized hypergeometric series, evaluated exactly.

#include "delannoy/errors.hpp"
#include "delannoy/eval_point.hpp"
#include "delannoy/rational.hpp"
#include "delannoy/report.hpp"

#include <optional>
#include <vector>

namespace delannoy {

/// pFq(a_1..a_p; b_1..b_q; z). At least one a_i must be a non-positive
/// integer so the series is a finite sum.
struct HyperSpec {
    std::vector<Rational> numerator_params;
    std::vector<Rational> denominator_params;
    Rational argument;
};

/// Smallest |a_i| over the non-positive integer numerator parameters, or
/// nullopt if the series does not terminate.
std::optional<unsigned> termination_index(const HyperSpec& series);

/// Finite sum up to and including the termination index. Denominators are
/// scanned for poles before summing. Throws std::invalid_argument for a
/// non-terminating series and PoleError when some (b_j)_k vanishes with
/// k <= termination index.
Rational hyper_eval(const HyperSpec& series);

/// (2r+1)_n/n! * 2F1(-n, r-x; 2r+1; 2).
Rational d_via_2f1(unsigned n, const EvalPoint& at);
/// (-1)^n (2r+1)_n/n! * 2F1(-n, r+1+x; 2r+1; 2).
Rational d_via_2f1_reflected(unsigned n, const EvalPoint& at);
/// ((2r+1)_n/n!)^2 * 4F3(-n, r+1+x, 2r+1+n, r-x; 2r+1, (2r+1)/2, r+1; 1).
Rational d_squared_via_4f3(unsigned n, const EvalPoint& at);

/// Terminating product formula with a = -n:
///   2F1(a,b;c;z) 2F1(a,c-b;c;z)
///     = (1-z)^(-a) 4F3(a, b, c-a, c-b; c, c/2, (c+1)/2; z^2/(4(z-1))).
/// Throws std::domain_error for z = 1 and PoleError on a pole.
VerifyReport clausen_product_check(unsigned n, const Rational& b, const Rational& c,
                                   const Rational& z, const CheckOptions& options = {});

/// clausen_product_check for every n <= n_max over a fixed grid of (b, c, z)
/// plus b = r+1+x, c = 2r+1, z = 2 at sampled (r, x). Poles are skipped.
VerifyReport verify_clausen_product(unsigned n_max, const CheckOptions& options = {});

/// The 2F1 and 4F3 forms of d_n and d_n^2 against d_eval at `points`
/// deterministic non-excluded rational points, for every n <= n_max.
VerifyReport verify_hypergeometric_form(unsigned n_max, unsigned points = 50,
                                        const CheckOptions& options = {});

} // namespace delannoy
