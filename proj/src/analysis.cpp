#include "delannoy/analysis.hpp"

#include "delannoy/combinatorics.hpp"
#include "delannoy/sequences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace delannoy {

GridSpec GridSpec::product(const std::vector<Rational>& r_values,
                           const std::vector<Rational>& x_values, unsigned n_max) {
    GridSpec grid;
    grid.n_max = n_max;
    for (const auto& r : r_values)
        for (const auto& x : x_values) grid.points.push_back({r, x});
    return grid;
}

GridSpec GridSpec::parse(std::istream& in) {
    GridSpec grid;
    bool have_n_max = false;
    std::string line;
    unsigned line_no = 0;
    auto bad = [&line_no](const std::string& what) {
        return std::invalid_argument("grid line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;
        if (first.rfind("n_max=", 0) == 0) {
            std::string digits = first.substr(6);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                throw bad("malformed n_max '" + first + "'");
            grid.n_max = static_cast<unsigned>(std::stoul(digits));
            have_n_max = true;
            continue;
        }
        std::string second;
        std::string extra;
        if (!(words >> second) || (words >> extra) || first.rfind("r=", 0) != 0 ||
            second.rfind("x=", 0) != 0)
            throw bad("expected 'r=<p/q> x=<p/q>', got '" + line + "'");
        try {
            grid.points.push_back({Rational::parse(first.substr(2)), Rational::parse(second.substr(2))});
        } catch (const std::invalid_argument& e) {
            throw bad(e.what());
        }
    }
    if (!have_n_max) throw std::invalid_argument("grid file has no n_max= header");
    return grid;
}

std::vector<Rational> rational_range(const Rational& lo, const Rational& hi, const Rational& step) {
    if (step.sign() <= 0) throw std::invalid_argument("range step must be positive");
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

namespace {

bool r_above_minus_half(const Rational& r) { return r > Rational(-1, 2); }

void require(bool ok, const std::string& claim, const EvalPoint& pt, const char* what) {
    if (!ok)
        throw std::invalid_argument(claim + ": grid point " + pt.str() + " violates " + what);
}

} // namespace

ScanReport check_ratio_bound(const GridSpec& grid) {
    ScanReport report{grid, "ratio-lower-bound", {}, {}, {}, 0};
    for (const auto& pt : grid.points) {
        require(r_above_minus_half(pt.r), report.claim_id, pt, "r > -1/2");
        require(!pt.x_is_minus_half(), report.claim_id, pt, "x != -1/2");
        auto d = d_eval_sequence(grid.n_max, pt);
        const Rational one_plus_2x = 1 + 2 * pt.x;
        for (unsigned n = 2; n <= grid.n_max; ++n) {
            Rational ratio = d[n] * d[n - 1] / one_plus_2x;
            Rational bound = (binom_gen(2 * pt.r + (n - 1), n - 1) + d[n - 1] * d[n - 1]) / n;
            Rational gap = ratio - bound;
            report.comparisons += 2;
            if (gap.sign() < 0)
                report.violations.push_back({n, pt, gap});
            else if (gap.is_zero())
                report.zero_hits.push_back({n, pt});
            if (bound.sign() <= 0) report.violations.push_back({n, pt, bound});
        }
    }
    return report;
}

ScanReport check_positivity(const GridSpec& grid) {
    ScanReport report{grid, "sign-and-lower-bound", {}, {}, {}, 0};
    for (const auto& pt : grid.points) {
        require(r_above_minus_half(pt.r), report.claim_id, pt, "r > -1/2");
        if (pt.x_is_minus_half()) {
            report.skipped.emplace_back(pt, "x = -1/2: neither sign claim applies");
            continue;
        }
        auto d = d_eval_sequence(grid.n_max, pt);
        if (pt.x < Rational(-1, 2)) {
            for (unsigned n = 0; n <= grid.n_max; ++n) {
                Rational signed_value = d[n] * sign_power(n);
                ++report.comparisons;
                if (signed_value.sign() <= 0) report.violations.push_back({n, pt, signed_value});
            }
            continue;
        }
        const Rational base = 2 * pt.x + 1;
        Rational bound = base;  // (2x+1)^n / n!, updated incrementally
        for (unsigned n = 2; n <= grid.n_max; ++n) {
            bound *= base;
            bound /= n;
            report.comparisons += 2;
            Rational excess = d[n] - bound;
            if (excess.sign() <= 0) report.violations.push_back({n, pt, excess});
            if (bound.sign() <= 0) report.violations.push_back({n, pt, bound});
        }
    }
    return report;
}

namespace {

Rational turan_from(const std::vector<Rational>& d, unsigned n) {
    Rational v = d[n] * d[n] - d[n + 1] * d[n - 1];
    return n % 2 == 0 ? v : -v;
}

} // namespace

Rational turan_value(unsigned n, const EvalPoint& at) {
    if (n == 0) throw std::invalid_argument("turan_value needs n >= 1");
    return turan_from(d_eval_sequence(n + 1, at), n);
}

ScanReport scan_conjecture(const GridSpec& grid, unsigned threads) {
    ScanReport report{grid, "turan-conjecture", {}, {}, {}, 0};
    for (const auto& pt : grid.points) {
        require(pt.r.sign() >= 0, report.claim_id, pt, "r >= 0");
        require(pt.x >= Rational(-1) && pt.x.sign() <= 0, report.claim_id, pt, "-1 <= x <= 0");
    }
    if (grid.n_max == 0 || grid.points.empty()) return report;

    struct PointResult {
        std::vector<ScanViolation> violations;
        std::vector<ScanHit> zeros;
    };
    std::vector<PointResult> results(grid.points.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& pt = grid.points[i];
            auto d = d_eval_sequence(grid.n_max + 1, pt);
            for (unsigned n = 1; n <= grid.n_max; ++n) {
                Rational t = turan_from(d, n);
                if (t.sign() < 0)
                    results[i].violations.push_back({n, pt, t});
                else if (t.is_zero())
                    results[i].zeros.push_back({n, pt});
            }
        }
    };

    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.points.size()));
    std::vector<std::jthread> pool;
    const std::size_t chunk = (grid.points.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < grid.points.size(); begin += chunk)
        pool.emplace_back(work, begin, std::min(begin + chunk, grid.points.size()));
    pool.clear();  // joins

    for (auto& r : results) {
        report.comparisons += grid.n_max;
        report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
        report.zero_hits.insert(report.zero_hits.end(), r.zeros.begin(), r.zeros.end());
    }
    return report;
}

GridSpec default_conjecture_grid() {
    return GridSpec::product(rational_range(0, 4, Rational(1, 4)),
                             rational_range(-1, 0, Rational(1, 8)), 40);
}

GridSpec default_inequality_grid() {
    std::vector<Rational> rs{Rational(-1, 4), 0, Rational(1, 2), 1, 2};
    std::vector<Rational> xs{-3, -2, Rational(-3, 2), -1, Rational(-3, 4), Rational(-51, 100),
                             Rational(-49, 100), Rational(-1, 4), 0, Rational(1, 2), 1, 2, 3};
    return GridSpec::product(rs, xs, 40);
}

nlohmann::ordered_json to_json(const ScanReport& report) {
    nlohmann::ordered_json j;
    j["id"] = report.claim_id;
    j["kind"] = "scan";
    j["points"] = report.grid.points.size();
    j["n_max"] = report.grid.n_max;
    j["comparisons"] = report.comparisons;
    j["passed"] = report.clean();
    auto violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"n", v.n}, {"r", v.at.r.str()}, {"x", v.at.x.str()},
                              {"value", v.value.str()}});
    j["violations"] = std::move(violations);
    auto zeros = nlohmann::ordered_json::array();
    for (const auto& z : report.zero_hits)
        zeros.push_back({{"n", z.n}, {"r", z.at.r.str()}, {"x", z.at.x.str()}});
    j["zero_hits"] = std::move(zeros);
    auto skipped = nlohmann::ordered_json::array();
    for (const auto& [pt, reason] : report.skipped)
        skipped.push_back({{"r", pt.r.str()}, {"x", pt.x.str()}, {"reason", reason}});
    j["skipped"] = std::move(skipped);
    return j;
}

std::string to_json_line(const ScanReport& report) { return to_json(report).dump(); }

} // namespace delannoy
