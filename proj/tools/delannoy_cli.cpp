#include "delannoy/analysis.hpp"
#include "delannoy/sequences.hpp"
#include "delannoy/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace delannoy;

namespace {

constexpr int kPass = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    UsageError(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(kind)) {}
    std::string kind;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("parse", flag + " expects an exact rational p/q, got '" + text + "'");
    }
}

int cmd_eval(unsigned n, const std::string& r, const std::string& x) {
    std::cout << d_eval(n, {parse_rational("-r", r), parse_rational("-x", x)}).str() << '\n';
    return kPass;
}

int cmd_poly(unsigned n, const std::string& route_text) {
    auto route = parse_route(route_text);
    if (!route) throw UsageError("route", "unknown route '" + route_text + "'");
    auto seq = SequenceCache::global().get(*route, n);
    std::cout << seq->polys[n].str() << '\n';
    return kPass;
}

int cmd_table(unsigned n_max, const std::string& r_text, const std::vector<std::string>& x_texts,
              const std::string& format) {
    const Rational r = parse_rational("-r", r_text);
    std::vector<Rational> xs;
    for (const auto& t : x_texts) xs.push_back(parse_rational("-x", t));
    std::vector<std::vector<Rational>> columns;
    for (const auto& x : xs) columns.push_back(d_eval_sequence(n_max, {r, x}));

    if (format == "json") {
        for (unsigned n = 0; n <= n_max; ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["r"] = r.str();
            auto values = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < xs.size(); ++i) values[xs[i].str()] = columns[i][n].str();
            row["values"] = std::move(values);
            std::cout << row.dump() << '\n';
        }
        return kPass;
    }
    const char* sep = format == "csv" ? "," : "\t";
    std::cout << "n";
    for (const auto& x : xs) std::cout << sep << x.str();
    std::cout << '\n';
    for (unsigned n = 0; n <= n_max; ++n) {
        std::cout << n;
        for (const auto& col : columns) std::cout << sep << col[n].str();
        std::cout << '\n';
    }
    return kPass;
}

int cmd_verify(const std::vector<std::string>& suite, std::optional<unsigned> depth,
               const std::string& format, const std::optional<std::string>& fault, bool point_grid) {
    SuiteConfig config;
    config.selected = suite;
    config.depth = depth;
    config.perturb = fault;
    config.point_grid = point_grid;
    const auto& known = verifier_ids();
    auto check_id = [&known](const std::string& id) {
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw UsageError("unknown-identity", "no verifier named '" + id + "'");
    };
    for (const auto& id : suite) check_id(id);
    if (fault) check_id(*fault);

    auto reports = run_suite(config);
    for (const auto& report : reports)
        std::cout << (format == "json" ? to_json_line(report) : to_text_line(report)) << '\n';
    return all_passed(reports) ? kPass : kClaimFailure;
}

int cmd_scan(const std::optional<std::string>& grid_file, std::optional<unsigned> n_max,
             unsigned threads, const std::string& format) {
    GridSpec grid;
    if (grid_file) {
        std::ifstream in(*grid_file);
        if (!in) throw UsageError("io", "cannot open grid file '" + *grid_file + "'");
        try {
            grid = GridSpec::parse(in);
        } catch (const std::invalid_argument& e) {
            throw UsageError("grid", e.what());
        }
    } else {
        grid = default_conjecture_grid();
    }
    if (n_max) grid.n_max = *n_max;

    ScanReport report;
    try {
        report = scan_conjecture(grid, threads);
    } catch (const std::invalid_argument& e) {
        throw UsageError("grid", e.what());
    }
    if (format == "json") {
        std::cout << to_json_line(report) << '\n';
    } else {
        std::cout << (report.clean() ? "PASS " : "FAIL ") << report.claim_id << " ("
                  << grid.points.size() << " points, n <= " << grid.n_max << ", "
                  << report.comparisons << " comparisons, " << report.violations.size()
                  << " violations, " << report.zero_hits.size() << " zero hits)\n";
        for (const auto& v : report.violations)
            std::cout << "violation n=" << v.n << ' ' << v.at.str() << " value=" << v.value.str()
                      << '\n';
        for (const auto& z : report.zero_hits)
            std::cout << "zero n=" << z.n << ' ' << z.at.str() << '\n';
    }
    return report.clean() ? kPass : kClaimFailure;
}

int cmd_delannoy(unsigned n, unsigned m) {
    std::cout << delannoy_dp(n, m).get_str() << '\n';
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with generalized Delannoy polynomials d_n^(r)(x)"};
    app.require_subcommand(1);

    unsigned n = 0;
    unsigned m = 0;
    std::string r = "0";
    std::string x = "0";

    auto* eval = app.add_subcommand("eval", "Evaluate d_n^(r)(x) exactly");
    eval->add_option("-n", n, "Index")->required();
    eval->add_option("-r", r, "Parameter r as p/q")->required();
    eval->add_option("-x", x, "Argument x as p/q")->required();

    std::string route = "direct";
    auto* poly = app.add_subcommand("poly", "Print d_n as a polynomial in x and r");
    poly->add_option("-n", n, "Index")->required();
    poly->add_option("--route", route, "direct, newform, threeterm, twoterm or series");

    unsigned n_max = 0;
    std::vector<std::string> x_list;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "Tabulate d_n^(r)(x) for n <= n_max");
    table->add_option("--n-max", n_max, "Largest n")->required();
    table->add_option("-r", r, "Parameter r as p/q");
    table->add_option("-x", x_list, "Arguments, comma separated")->required()->delimiter(',');
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json", "text"}));

    std::vector<std::string> suite;
    std::optional<unsigned> depth;
    std::string verify_format = "text";
    std::optional<std::string> fault;
    bool point_grid = false;
    auto* verify = app.add_subcommand("verify", "Run identity verifiers");
    verify->add_option("--suite", suite, "Verifier ids, comma separated")->delimiter(',');
    verify->add_option("--depth", depth, "n_max for every selected verifier");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--inject-fault", fault, "Perturb the right-hand sides of this verifier");
    verify->add_flag("--point-grid", point_grid, "Check at sampled rational points");

    std::optional<std::string> grid_file;
    std::optional<unsigned> scan_n_max;
    unsigned threads = 0;
    std::string scan_format = "text";
    auto* scan = app.add_subcommand("scan", "Scan the Turan-type conjecture on a grid");
    scan->add_option("--grid", grid_file, "Grid file (n_max= header, r=.. x=.. lines)");
    scan->add_option("--n-max", scan_n_max, "Override the grid's n_max");
    scan->add_option("--threads", threads, "Worker threads, 0 for all cores");
    scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "text"}));

    auto* delannoy = app.add_subcommand("delannoy", "Delannoy number D(n, m)");
    delannoy->add_option("-n", n)->required();
    delannoy->add_option("-m", m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*eval) return cmd_eval(n, r, x);
        if (*poly) return cmd_poly(n, route);
        if (*table) return cmd_table(n_max, r, x_list, table_format);
        if (*verify) return cmd_verify(suite, depth, verify_format, fault, point_grid);
        if (*scan) return cmd_scan(grid_file, scan_n_max, threads, scan_format);
        if (*delannoy) return cmd_delannoy(n, m);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.kind << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
