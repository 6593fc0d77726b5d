#include "delannoy/hyper.hpp"

#include "delannoy/combinatorics.hpp"
#include "delannoy/sampling.hpp"
#include "delannoy/sequences.hpp"

#include <stdexcept>
#include <string>

namespace delannoy {

std::optional<unsigned> termination_index(const HyperSpec& series) {
    std::optional<unsigned> index;
    for (const auto& a : series.numerator_params) {
        if (!a.is_nonpositive_integer()) continue;
        unsigned m = static_cast<unsigned>((-a).numerator().get_ui());
        if (!index || m < *index) index = m;
    }
    return index;
}

Rational hyper_eval(const HyperSpec& series) {
    auto last = termination_index(series);
    if (!last) throw std::invalid_argument("hypergeometric series does not terminate");

    for (const auto& b : series.denominator_params)
        if (b.is_nonpositive_integer() && -b < Rational(*last))
            throw PoleError("denominator parameter " + b.str() + " vanishes before term " +
                            std::to_string(*last));

    Rational term(1);
    Rational sum(1);
    for (unsigned k = 0; k < *last; ++k) {
        for (const auto& a : series.numerator_params) term *= a + k;
        for (const auto& b : series.denominator_params) term /= b + k;
        term *= series.argument;
        term /= Rational(k + 1);
        sum += term;
    }
    return sum;
}

namespace {

Rational prefactor(unsigned n, const Rational& r) {
    return pochhammer(2 * r + 1, n) / Rational(factorial(n));
}

} // namespace

Rational d_via_2f1(unsigned n, const EvalPoint& at) {
    HyperSpec series{{-Rational(n), at.r - at.x}, {2 * at.r + 1}, Rational(2)};
    return prefactor(n, at.r) * hyper_eval(series);
}

Rational d_via_2f1_reflected(unsigned n, const EvalPoint& at) {
    HyperSpec series{{-Rational(n), at.r + 1 + at.x}, {2 * at.r + 1}, Rational(2)};
    return sign_power(n) * prefactor(n, at.r) * hyper_eval(series);
}

Rational d_squared_via_4f3(unsigned n, const EvalPoint& at) {
    const Rational& r = at.r;
    const Rational& x = at.x;
    HyperSpec series{{-Rational(n), r + 1 + x, 2 * r + 1 + n, r - x},
                   {2 * r + 1, (2 * r + 1) / 2, r + 1},
                   Rational(1)};
    Rational pre = prefactor(n, r);
    return pre * pre * hyper_eval(series);
}

VerifyReport clausen_product_check(unsigned n, const Rational& b, const Rational& c,
                                   const Rational& z, const CheckOptions& options) {
    if (z == 1) throw std::domain_error("product formula needs z != 1");
    const Rational a = -Rational(n);
    std::string params = "n=" + std::to_string(n) + " b=" + b.str() + " c=" + c.str() +
                         " z=" + z.str();
    VerifyReport report("clausen-product", Mode::PointGrid, params);
    report.cover("clausen-product");

    Rational lhs = hyper_eval({{a, b}, {c}, z}) * hyper_eval({{a, c - b}, {c}, z});
    Rational w = z * z / (4 * (z - 1));
    Rational rhs = power(1 - z, static_cast<int>(n)) *
                   hyper_eval({{a, b, c - a, c - b}, {c, c / 2, (c + 1) / 2}, w});
    if (options.perturb_rhs) rhs += 1;
    ++report.checks;
    if (lhs != rhs) report.fail({"clausen-product", params, lhs.str(), rhs.str()});
    return report;
}

VerifyReport verify_clausen_product(unsigned n_max, const CheckOptions& options) {
    VerifyReport report("clausen-product", Mode::PointGrid, "n<=" + std::to_string(n_max));
    report.cover("clausen-product");

    struct Params {
        Rational b, c, z;
    };
    std::vector<Params> grid;
    const std::vector<Rational> bs{2, Rational(1, 2), Rational(-1, 3), Rational(5, 2),
                                   Rational(7, 3)};
    const std::vector<Rational> cs{3, Rational(5, 2), Rational(1, 3), Rational(7, 2),
                                   Rational(-7, 3)};
    const std::vector<Rational> zs{2, Rational(1, 2), -1, 3, Rational(-2, 3)};
    for (const auto& b : bs)
        for (const auto& c : cs)
            for (const auto& z : zs) grid.push_back({b, c, z});
    // The specialization used for the Delannoy squares: b = r+1+x, c = 2r+1, z = 2.
    // c must not be a nonpositive integer, which rules out 2r in {-1, -2, ...}.
    for (const auto& pt : sample_points(8, options.seed, [](const EvalPoint& pt) {
             return !pt.r_is_excluded_half_integers();
         }))
        grid.push_back({pt.r + 1 + pt.x, 2 * pt.r + 1, 2});

    for (unsigned n = 0; n <= n_max; ++n) {
        for (const auto& p : grid) {
            try {
                auto single = clausen_product_check(n, p.b, p.c, p.z, options);
                report.checks += single.checks;
                if (!single.passed()) report.fail(*single.counterexample());
            } catch (const PoleError& e) {
                report.skip("n=" + std::to_string(n) + " b=" + p.b.str() + " c=" + p.c.str() +
                                " z=" + p.z.str(),
                            e.what());
            }
            if (!report.passed()) return report;
        }
    }
    return report;
}

VerifyReport verify_hypergeometric_form(unsigned n_max, unsigned points,
                                        const CheckOptions& options) {
    VerifyReport report("hypergeometric-form", Mode::PointGrid,
                        "n<=" + std::to_string(n_max) + ", " + std::to_string(points) +
                            " points");
    for (const char* id : {"hypergeometric-2f1", "hypergeometric-2f1-reflected",
                           "hypergeometric-2f1-product", "hypergeometric-4f3-square"})
        report.cover(id);

    auto pts = sample_points(points, options.seed, [](const EvalPoint& pt) {
        return !pt.r_is_excluded_half_integers();
    });
    const Rational bump = options.perturb_rhs ? 1 : 0;
    for (const auto& pt : pts) {
        auto d = d_eval_sequence(n_max, pt);
        for (unsigned n = 0; n <= n_max; ++n) {
            std::string params = "n=" + std::to_string(n) + " " + pt.str();
            auto check = [&](const char* id, const Rational& lhs, const Rational& rhs) {
                ++report.checks;
                if (lhs != rhs) report.fail({id, params, lhs.str(), rhs.str()});
            };
            Rational direct = d_via_2f1(n, pt);
            Rational reflected = d_via_2f1_reflected(n, pt);
            check("hypergeometric-2f1", d[n], direct + bump);
            check("hypergeometric-2f1-reflected", d[n], reflected + bump);
            check("hypergeometric-2f1-product", d[n] * d[n], direct * reflected + bump);
            check("hypergeometric-4f3-square", d[n] * d[n], d_squared_via_4f3(n, pt) + bump);
            if (!report.passed()) return report;
        }
    }
    return report;
}

} // namespace delannoy
