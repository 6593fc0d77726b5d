#pragma once

// Exact sign checks of the inequalities satisfied by d_n^(r)(x), and a grid
// scanner for the Turan-type conjecture
//   (-1)^n (d_n^2 - d_{n+1} d_{n-1}) > 0   for r >= 0, -1 <= x <= 0, n >= 1.

#include "delannoy/eval_point.hpp"

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

namespace delannoy {

/// Grid points in canonical order plus the largest n to examine.
struct GridSpec {
    std::vector<EvalPoint> points;
    unsigned n_max = 0;

    /// r-major product of the two value lists.
    static GridSpec product(const std::vector<Rational>& r_values,
                            const std::vector<Rational>& x_values, unsigned n_max);

    /// Line-oriented text: an `n_max=<N>` header and `r=<p/q> x=<p/q>`
    /// lines. Blank lines and `#` comments are ignored. Throws
    /// std::invalid_argument naming the offending line.
    static GridSpec parse(std::istream& in);
};

/// lo, lo+step, ..., hi (hi included when it lies on the lattice).
std::vector<Rational> rational_range(const Rational& lo, const Rational& hi, const Rational& step);

struct ScanViolation {
    unsigned n;
    EvalPoint at;
    Rational value;
};

struct ScanHit {
    unsigned n;
    EvalPoint at;
};

struct ScanReport {
    GridSpec grid;
    std::string claim_id;
    /// Points where the claimed sign fails; `value` is the offending quantity.
    std::vector<ScanViolation> violations;
    /// Points where the compared quantity is exactly zero and the claim
    /// does not count that as a failure.
    std::vector<ScanHit> zero_hits;
    /// Grid points outside the claim's hypotheses, with the reason.
    std::vector<std::pair<EvalPoint, std::string>> skipped;
    unsigned comparisons = 0;

    bool clean() const { return violations.empty(); }
};

/// d_n d_{n-1}/(1+2x) >= (binom(2r+n-1, n-1) + d_{n-1}^2)/n > 0 for
/// r > -1/2, x != -1/2, n >= 2. Equality in the first comparison is
/// recorded as a zero hit. Throws std::invalid_argument for grid points with
/// r <= -1/2 or x = -1/2.
ScanReport check_ratio_bound(const GridSpec& grid);

/// For r > -1/2: (-1)^n d_n > 0 when x < -1/2 (all n), and
/// d_n > (2x+1)^n/n! > 0 when x > -1/2 (n >= 2). Points with x = -1/2 are
/// skipped. Throws std::invalid_argument for r <= -1/2.
ScanReport check_positivity(const GridSpec& grid);

/// (-1)^n (d_n^2 - d_{n+1} d_{n-1}); requires n >= 1.
Rational turan_value(unsigned n, const EvalPoint& at);

/// Evaluates turan_value for 1 <= n <= n_max at every grid point. Negative
/// values are violations; exact zeros are zero hits. Throws
/// std::invalid_argument for points outside r >= 0, -1 <= x <= 0.
/// Points are split across `threads` workers; output order is canonical.
ScanReport scan_conjecture(const GridSpec& grid, unsigned threads = 0);

/// r in {0, 1/4, ..., 4}, x in {-1, -7/8, ..., 0}, n <= 40.
GridSpec default_conjecture_grid();
/// r in {-1/4, 0, 1/2, 1, 2}, x on both sides of -1/2, n <= 40.
GridSpec default_inequality_grid();

/// {id, kind:"scan", grid, n_max, comparisons, passed, violations,
///  zero_hits, skipped}; the same one-record-per-line format as VerifyReport.
nlohmann::ordered_json to_json(const ScanReport& report);
std::string to_json_line(const ScanReport& report);

} // namespace delannoy
