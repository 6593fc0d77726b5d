#include "delannoy/verify.hpp"

#include "backends.hpp"
#include "identities.hpp"

#include "delannoy/hyper.hpp"
#include "delannoy/sampling.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace delannoy {

using detail::Checks;
using detail::PointBackend;
using detail::SymbolicBackend;

namespace {

template <class V>
void judge(VerifyReport& report, Checks<V>& checks, const std::string& where,
           const CheckOptions& options) {
    for (auto& c : checks) {
        report.cover(c.identity);
        if (!c.skip_reason.empty()) {
            report.skip(c.params + where, c.skip_reason);
            continue;
        }
        if (options.perturb_rhs) c.rhs += V{Rational(1)};
        ++report.checks;
        if (!(c.lhs == c.rhs))
            report.fail({c.identity, c.params + where, c.lhs.str(), c.rhs.str()});
    }
}

std::string range_text(const std::string& base, const CheckOptions& options) {
    if (!options.point_grid) return base;
    return base + ", " + std::to_string(options.samples) + " points";
}

// Runs body(backend, n) for n in [n_lo, n_hi] either symbolically (on the
// cached defining-sum sequence up to seq_max) or at sampled points.
template <class Body>
VerifyReport drive(VerifyReport report, unsigned n_lo, unsigned n_hi, unsigned seq_max,
                   const CheckOptions& options, SequenceCache& cache, Body body) {
    if (!options.point_grid) {
        SymbolicBackend be(cache.get(Route::Direct, seq_max));
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            auto checks = body(be, n);
            judge(report, checks, be.where(), options);
            if (!report.passed()) break;
        }
        return report;
    }
    report.mode = Mode::PointGrid;
    report.skipped_points.clear();
    for (const auto& pt : sample_generic_points(options.samples, options.seed)) {
        PointBackend be(pt, seq_max);
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            auto checks = body(be, n);
            judge(report, checks, be.where(), options);
            if (!report.passed()) return report;
        }
    }
    return report;
}

std::string upto(unsigned n) { return "n<=" + std::to_string(n); }

void skip_excluded_half(VerifyReport& report) {
    report.skip("r in {-1/2, -1, -3/2, ...}",
                "identity stated only off this set; cleared form checked as a polynomial");
}

} // namespace

VerifyReport verify_square(unsigned n_max, const CheckOptions& options, SequenceCache& cache) {
    VerifyReport report("square-formula", Mode::ClearedDenominator,
                        range_text(upto(n_max), options));
    skip_excluded_half(report);
    return drive(std::move(report), 0, n_max, n_max, options, cache,
                 [](const auto& be, unsigned n) { return detail::square_formula(be, n); });
}

VerifyReport verify_linearization(unsigned m_max, unsigned n_max, const CheckOptions& options,
                                  SequenceCache& cache) {
    VerifyReport report("linearization", Mode::SymbolicPoly,
                        range_text("m<=" + std::to_string(m_max) + " " + upto(n_max), options));
    return drive(std::move(report), 0, m_max, m_max + n_max, options, cache,
                 [n_max](const auto& be, unsigned m) {
                     auto all = detail::linearization(be, m, 0);
                     for (unsigned n = 1; n <= n_max; ++n) {
                         auto more = detail::linearization(be, m, n);
                         all.insert(all.end(), more.begin(), more.end());
                     }
                     return all;
                 });
}

VerifyReport verify_newform_consequences(unsigned n_max, const CheckOptions& options,
                                         SequenceCache& cache) {
    VerifyReport report("inversion-sums", Mode::ClearedDenominator,
                        range_text(upto(n_max), options));
    skip_excluded_half(report);
    return drive(std::move(report), 0, n_max, n_max, options, cache,
                 [](const auto& be, unsigned n) { return detail::inversion_sums(be, n); });
}

VerifyReport verify_jacobi(unsigned n_max, const CheckOptions& options, SequenceCache& cache) {
    VerifyReport report("jacobi-connection", Mode::SymbolicPoly,
                        range_text(upto(n_max), options));
    return drive(std::move(report), 0, n_max, n_max, options, cache,
                 [](const auto& be, unsigned n) { return detail::jacobi_connection(be, n); });
}

VerifyReport verify_meixner(unsigned n_max, const CheckOptions& options, SequenceCache& cache) {
    VerifyReport report("meixner-connection", Mode::InterpolationGrid,
                        range_text(upto(n_max), options));
    if (options.point_grid)
        return drive(std::move(report), 0, n_max, n_max, options, cache,
                     [](const auto& be, unsigned n) { return detail::meixner_connection(be, n); });

    // Both sides have degree <= n in r, so agreement (symbolic in x) at the
    // n+1 values r = 1..n+1 proves the identity.
    report.degree_bound = n_max;
    report.samples = n_max + 1;
    report.range += ", r in {1..n+1}";
    skip_excluded_half(report);
    auto seq = cache.get(Route::Direct, n_max);
    for (unsigned n = 0; n <= n_max && report.passed(); ++n) {
        for (unsigned j = 1; j <= n + 1 && report.passed(); ++j) {
            SymbolicBackend be(seq, Rational(j));
            auto checks = detail::meixner_connection(be, n);
            judge(report, checks, be.where(), options);
        }
    }
    return report;
}

VerifyReport verify_recurrences(unsigned n_max, const CheckOptions& options, SequenceCache& cache) {
    VerifyReport report("recurrences", Mode::SymbolicPoly, range_text(upto(n_max), options));
    return drive(std::move(report), 0, n_max, n_max + 1, options, cache,
                 [](const auto& be, unsigned n) { return detail::recurrences(be, n); });
}

VerifyReport verify_special_values(unsigned n_max, const CheckOptions& options,
                                   SequenceCache& cache) {
    VerifyReport report("special-values", Mode::ClearedDenominator,
                        range_text(upto(n_max), options));
    report.skip("r=-1", "value-at-one, value-at-three-halves, value-at-two: r+1 in a denominator");
    report.skip("r=-3/2", "value-at-three-halves: 2r+3 in a denominator");
    report.skip("r=-2", "value-at-two: r+2 in a denominator");
    return drive(std::move(report), 0, n_max, n_max, options, cache,
                 [](const auto& be, unsigned n) { return detail::special_values(be, n); });
}

VerifyReport verify_shift_identities(unsigned n_max, const CheckOptions& options,
                                     SequenceCache& cache) {
    VerifyReport report("shift-identities", Mode::SymbolicPoly, range_text(upto(n_max), options));
    return drive(std::move(report), 0, n_max, n_max + 1, options, cache,
                 [](const auto& be, unsigned n) { return detail::shift_identities(be, n); });
}

namespace {

// a = 1/2 - j avoids every integer; the explicit a = -1 and a = -2 cases
// are checked on top of the grid.
std::vector<Rational> guo_a_grid(unsigned n) {
    std::vector<Rational> grid;
    for (unsigned j = 1; j <= 2 * n + 2; ++j) grid.push_back(Rational(1, 2) - Rational(j));
    return grid;
}

std::vector<Rational> guo_b_grid(unsigned n) {
    std::vector<Rational> grid;
    for (unsigned j = 1; j <= 2 * n + 2; ++j) grid.push_back(Rational(j));
    return grid;
}

template <class Backend, class MakeFixedR>
void guo_family_at(VerifyReport& report, const Backend& be, unsigned n,
                   const CheckOptions& options, MakeFixedR make_fixed_r) {
    auto run = [&](auto checks, const std::string& where) {
        judge(report, checks, where, options);
    };
    auto grid = guo_a_grid(n);
    for (const auto& a : grid) {
        run(detail::guo_square(be, n, a), be.where());
        run(detail::guo_at_minus_one(be, n, a), be.where());
    }
    run(detail::guo_square(be, n, Rational(-1)), be.where());
    run(detail::guo_square(be, n, Rational(-2)), be.where());
    for (const auto& b : guo_b_grid(n)) {
        auto fixed = make_fixed_r((b - 1) / 2);
        run(detail::meixner_square(fixed, n), fixed.where());
    }
    run(detail::guo_central_binomial(be, n), be.where());
    run(detail::guo_at_minus_two(be, n), be.where());
}

} // namespace

VerifyReport verify_guo_family(unsigned n_max, const CheckOptions& options, SequenceCache& cache) {
    VerifyReport report("guo-family", Mode::InterpolationGrid, range_text(upto(n_max), options));
    // Cleared of denominators, each side has degree <= 2n in a (or b).
    report.degree_bound = 2 * n_max + 1;
    report.samples = 2 * n_max + 2;
    report.range += ", a in {1/2-j}, b in {j}, j=1..2n+2";

    if (!options.point_grid) {
        auto seq = cache.get(Route::Direct, n_max);
        SymbolicBackend free_r(seq);
        for (unsigned n = 0; n <= n_max && report.passed(); ++n)
            guo_family_at(report, free_r, n, options,
                          [&seq](const Rational& r) { return SymbolicBackend(seq, r); });
        return report;
    }
    report.mode = Mode::PointGrid;
    for (const auto& pt : sample_generic_points(options.samples, options.seed)) {
        PointBackend be(pt, n_max);
        for (unsigned n = 0; n <= n_max && report.passed(); ++n)
            guo_family_at(report, be, n, options, [&pt, n_max](const Rational& r) {
                return PointBackend(EvalPoint{r, pt.x}, n_max);
            });
        if (!report.passed()) break;
    }
    return report;
}

VerifyReport verify_weighted_square_sum(unsigned n_max, const CheckOptions& options,
                                   SequenceCache& cache) {
    VerifyReport report("weighted-square-sum", Mode::SymbolicPoly,
                        range_text("1<=n<=" + std::to_string(n_max), options));
    return drive(std::move(report), 1, n_max, n_max, options, cache,
                 [](const auto& be, unsigned n) { return detail::weighted_square_sum(be, n); });
}

const std::vector<std::string>& verifier_ids() {
    static const std::vector<std::string> ids{
        "square-formula",     "linearization",      "inversion-sums",   "jacobi-connection",
        "meixner-connection", "recurrences",        "special-values",   "shift-identities",
        "guo-family",         "weighted-square-sum", "hypergeometric-form", "clausen-product"};
    return ids;
}

unsigned default_depth(const std::string& id) {
    static const std::map<std::string, unsigned> depths{
        {"square-formula", 12},     {"linearization", 8},       {"inversion-sums", 15},
        {"jacobi-connection", 12},  {"meixner-connection", 12}, {"recurrences", 25},
        {"special-values", 25},     {"shift-identities", 20},   {"guo-family", 10},
        {"weighted-square-sum", 15}, {"hypergeometric-form", 15}, {"clausen-product", 15}};
    auto it = depths.find(id);
    if (it == depths.end()) throw std::invalid_argument("unknown identity id '" + id + "'");
    return it->second;
}

namespace {

// Length of the symbolic sequence a verifier reads at a given depth.
unsigned sequence_need(const std::string& id, unsigned depth) {
    if (id == "linearization") return 2 * depth;
    if (id == "recurrences" || id == "shift-identities") return depth + 1;
    if (id == "hypergeometric-form" || id == "clausen-product") return 0;
    return depth;
}

} // namespace

VerifyReport run_verifier(const std::string& id, unsigned depth, const CheckOptions& options,
                          SequenceCache& cache) {
    if (id == "square-formula") return verify_square(depth, options, cache);
    if (id == "linearization") return verify_linearization(depth, depth, options, cache);
    if (id == "inversion-sums") return verify_newform_consequences(depth, options, cache);
    if (id == "jacobi-connection") return verify_jacobi(depth, options, cache);
    if (id == "meixner-connection") return verify_meixner(depth, options, cache);
    if (id == "recurrences") return verify_recurrences(depth, options, cache);
    if (id == "special-values") return verify_special_values(depth, options, cache);
    if (id == "shift-identities") return verify_shift_identities(depth, options, cache);
    if (id == "guo-family") return verify_guo_family(depth, options, cache);
    if (id == "weighted-square-sum") return verify_weighted_square_sum(depth, options, cache);
    if (id == "hypergeometric-form") return verify_hypergeometric_form(depth, 50, options);
    if (id == "clausen-product") return verify_clausen_product(depth, options);
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

std::vector<VerifyReport> run_suite(const SuiteConfig& config, SequenceCache& cache) {
    const auto& known = verifier_ids();
    auto is_known = [&known](const std::string& id) {
        return std::find(known.begin(), known.end(), id) != known.end();
    };
    for (const auto& id : config.selected)
        if (!is_known(id)) throw std::invalid_argument("unknown identity id '" + id + "'");
    for (const auto& [id, depth] : config.depths)
        if (!is_known(id)) throw std::invalid_argument("unknown identity id '" + id + "'");
    if (config.perturb && !is_known(*config.perturb))
        throw std::invalid_argument("unknown identity id '" + *config.perturb + "'");

    struct Task {
        std::string id;
        unsigned depth;
        CheckOptions options;
    };
    std::vector<Task> tasks;
    for (const auto& id : known) {
        if (!config.selected.empty() &&
            std::find(config.selected.begin(), config.selected.end(), id) == config.selected.end())
            continue;
        Task t{id, config.depth.value_or(default_depth(id)), {}};
        if (auto it = config.depths.find(id); it != config.depths.end()) t.depth = it->second;
        t.options.point_grid = config.point_grid;
        t.options.perturb_rhs = config.perturb == id;
        tasks.push_back(std::move(t));
    }

    // Build the longest shared sequence once so concurrent verifiers only trim it.
    if (!config.point_grid) {
        unsigned need = 0;
        for (const auto& t : tasks) need = std::max(need, sequence_need(t.id, t.depth));
        if (!tasks.empty()) cache.get(Route::Direct, need);
    }

    std::vector<VerifyReport> reports;
    if (!config.parallel) {
        for (const auto& t : tasks) reports.push_back(run_verifier(t.id, t.depth, t.options, cache));
        return reports;
    }
    std::vector<std::future<VerifyReport>> futures;
    for (const auto& t : tasks)
        futures.push_back(std::async(std::launch::async, [&cache, t] {
            return run_verifier(t.id, t.depth, t.options, cache);
        }));
    for (auto& f : futures) reports.push_back(f.get());
    return reports;
}

bool all_passed(const std::vector<VerifyReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerifyReport& r) { return r.passed(); });
}

} // namespace delannoy
