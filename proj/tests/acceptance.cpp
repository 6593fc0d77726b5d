// Runs the acceptance criteria end to end and prints one PASS/FAIL line per
// criterion. Every comparison is exact; the wall-clock limits are checked
// against a steady clock.

#include "delannoy/analysis.hpp"
#include "delannoy/combinatorics.hpp"
#include "delannoy/hyper.hpp"
#include "delannoy/sequences.hpp"
#include "delannoy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace delannoy;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

Outcome five_routes() {
    const unsigned n_max = 30;
    auto start = Clock::now();
    auto three = d_threeterm(n_max), two = d_twoterm(n_max), series = d_series(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly direct = d_direct(n);
        if (d_newform(n) != direct || three.polys[n] != direct || two.polys[n] != direct ||
            series.polys[n] != direct)
            return {false, "routes disagree at n=" + std::to_string(n)};
    }
    double t = seconds_since(start);
    return {t < 10.0, "n<=30, " + fmt_seconds(t) + " (limit 10 s)"};
}

Outcome delannoy_anchor() {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned m = 0; m <= 12; ++m)
            if (d_eval(n, {0, static_cast<int>(m)}) != Rational(delannoy_dp(n, m)))
                return {false, "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m)};
    if (delannoy_dp(2, 2) != 13) return {false, "D(2,2) != 13"};
    return {true, "0<=n,m<=12, D(2,2)=13"};
}

Outcome identity_suite() {
    SequenceCache cache;
    const CheckOptions opts;
    auto start = Clock::now();
    std::vector<VerifyReport> reports;
    reports.push_back(verify_square(12, opts, cache));
    reports.push_back(verify_linearization(8, 8, opts, cache));
    reports.push_back(verify_newform_consequences(15, opts, cache));
    reports.push_back(verify_jacobi(12, opts, cache));
    reports.push_back(verify_meixner(12, opts, cache));
    reports.push_back(verify_recurrences(25, opts, cache));
    reports.push_back(verify_special_values(25, opts, cache));
    reports.push_back(verify_shift_identities(20, opts, cache));
    reports.push_back(verify_guo_family(10, opts, cache));
    reports.push_back(verify_weighted_square_sum(15, opts, cache));
    double t = seconds_since(start);
    unsigned checks = 0;
    for (const auto& r : reports) {
        checks += r.checks;
        if (!r.passed()) return {false, to_text_line(r)};
    }
    return {t < 120.0, std::to_string(reports.size()) + " verifiers, " + std::to_string(checks) +
                           " checks, " + fmt_seconds(t) + " (limit 120 s)"};
}

Outcome hypergeometric_bridge() {
    auto forms = verify_hypergeometric_form(15, 50);
    if (!forms.passed()) return {false, to_text_line(forms)};
    auto product = verify_clausen_product(15);
    if (!product.passed()) return {false, to_text_line(product)};
    return {true, "50 points n<=15 (" + std::to_string(forms.checks) + " checks), product grid n<=15 (" +
                      std::to_string(product.checks) + " checks)"};
}

bool has_hit(const ScanReport& report, unsigned n, const EvalPoint& at) {
    return std::any_of(report.zero_hits.begin(), report.zero_hits.end(),
                       [&](const ScanHit& h) { return h.n == n && h.at == at; });
}

Outcome inequality_suite() {
    auto grid = default_inequality_grid();
    auto ratio = check_ratio_bound(grid);
    auto sign = check_positivity(grid);
    if (!ratio.clean() || !sign.clean())
        return {false, std::to_string(ratio.violations.size() + sign.violations.size()) + " violations"};
    const EvalPoint at{0, 1};
    Rational lhs = d_eval(2, at) * d_eval(1, at) / (1 + 2 * at.x);
    Rational d1 = d_eval(1, at);
    Rational rhs = (binom_gen(2 * at.r + 1, 1) + d1 * d1) / 2;
    if (lhs != Rational(5) || rhs != Rational(5) || !has_hit(ratio, 2, at))
        return {false, "equality case at n=2 r=0 x=1 not reproduced: " + lhs.str() + " vs " + rhs.str()};
    return {true, std::to_string(grid.points.size()) + " points n<=40, " +
                      std::to_string(ratio.comparisons + sign.comparisons) +
                      " comparisons, equality 5 = 5 at n=2 r=0 x=1"};
}

Outcome conjecture_scan() {
    auto start = Clock::now();
    auto report = scan_conjecture(default_conjecture_grid());
    double t = seconds_since(start);
    if (!report.clean()) return {false, std::to_string(report.violations.size()) + " strict violations"};
    if (!has_hit(report, 1, {0, 0})) return {false, "(n=1, r=0, x=0) missing from zero hits"};
    return {t < 60.0, std::to_string(report.grid.points.size()) + " points n<=40, 0 violations, " +
                          std::to_string(report.zero_hits.size()) + " boundary zeros, " +
                          fmt_seconds(t) + " (limit 60 s)"};
}

Outcome fault_injection() {
    for (const auto& target : verifier_ids()) {
        SuiteConfig config;
        config.perturb = target;
        auto reports = run_suite(config);
        for (const auto& r : reports) {
            bool should_fail = r.identity_id == target;
            if (r.passed() == should_fail) return {false, "perturbing " + target + ": " + to_text_line(r)};
            if (should_fail && !r.counterexample()) return {false, target + " failed without a counterexample"};
        }
    }
    return {true, std::to_string(verifier_ids().size()) + " verifiers, each fails alone with a counterexample"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"five-route agreement", five_routes},
        {"Delannoy anchor", delannoy_anchor},
        {"identity suite", identity_suite},
        {"hypergeometric bridge", hypergeometric_bridge},
        {"inequality suite", inequality_suite},
        {"conjecture scan", conjecture_scan},
        {"fault injection", fault_injection},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += !out.ok;
        std::printf("%s %d %s: %s\n", out.ok ? "PASS" : "FAIL", ++index, name.c_str(), out.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
