// Command-line front end: exact Euler-characteristic tables for generalized
// Kummer schemes, the cross-check verification suite, the brute-force
// order-ideal oracle, and degree-zero DT invariants of abelian 3-folds.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 data/integrity error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kummer/kummer.hpp"
#include "kummer/partitions.hpp"
#include "kummer/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_data = 3;

// Always the explicit p/q form, so consumers never have to guess.
std::string rational_str(const kummer::Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

fs::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_DATA_HOME")) return fs::path(xdg) / "kummer";
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".local" / "share" / "kummer";
    return fs::path(".kummer-cache");
}

struct TableArgs {
    int g = 2;
    int r = 0;
    long long chi_y = 1;
    int n_max = 12;
    std::string format = "json";
    std::string cache_dir = default_cache_dir().string();
};

struct VerifyArgs {
    int n_max = 12;
    std::string suite = "all";
    std::string format = "text";
    std::string cache_dir = default_cache_dir().string();
};

struct OracleArgs {
    int m = 3;
    int k_max = 8;
    std::string strategy = "tree";
    std::string cache_dir; // empty: do not persist
};

struct DtArgs {
    int n_max = 10;
    std::string format = "json";
};

int run_table(const TableArgs& args) {
    kummer::PmCache cache{fs::path(args.cache_dir)};
    cache.set_diagnostics(&std::cerr);
    const kummer::KummerParams params(args.g, args.r, args.chi_y, args.n_max);
    const kummer::KummerTable table = kummer::kummer_euler_table(params, cache);

    if (args.format == "csv") {
        std::cout << "g,r,chi_y,n,chi_kn,orbifold\n";
        for (int n = 1; n <= args.n_max; ++n)
            std::cout << params.g << ',' << params.r << ',' << params.chi_y << ',' << n << ','
                      << table.chi[static_cast<std::size_t>(n)].str() << ','
                      << rational_str(table.orbifold[static_cast<std::size_t>(n)]) << '\n';
        return exit_ok;
    }

    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["params"] = {{"g", params.g}, {"r", params.r}, {"chi_y", params.chi_y}, {"m", params.m()}};
    doc["route"] = params.m() == 1 ? "main_theorem (degenerate g+r=1 edge)" : "main_theorem";
    auto rows = nlohmann::ordered_json::array();
    for (int n = 1; n <= args.n_max; ++n)
        rows.push_back({{"n", n},
                        {"chi_kn", table.chi[static_cast<std::size_t>(n)].str()},
                        {"orbifold", rational_str(table.orbifold[static_cast<std::size_t>(n)])}});
    doc["rows"] = std::move(rows);
    std::cout << doc.dump(2) << '\n';
    return exit_ok;
}

int run_verify(const VerifyArgs& args) {
    kummer::PmCache cache{fs::path(args.cache_dir)};
    cache.set_diagnostics(&std::cerr);
    kummer::VerifyOptions opts;
    opts.n_max = args.n_max;

    kummer::VerifyReport report;
    if (args.suite == "series")
        report = kummer::verify_series(opts);
    else if (args.suite == "partitions")
        report = kummer::verify_partitions(opts);
    else if (args.suite == "weights")
        report = kummer::verify_weights(opts);
    else if (args.suite == "kummer")
        report = kummer::verify_kummer(opts, cache);
    else
        report = kummer::verify_all(opts, cache);

    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["schema_version"] = 1;
        doc["suite"] = args.suite;
        auto checks = nlohmann::ordered_json::array();
        for (const kummer::CheckResult& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"cases", c.cases},
                              {"first_failure_index", c.first_failure_index},
                              {"detail", c.detail}});
        doc["checks"] = std::move(checks);
        doc["all_pass"] = report.all_pass();
        std::cout << doc.dump(2) << '\n';
    } else {
        kummer::print_report(report, std::cout);
    }
    return report.all_pass() ? exit_ok : exit_verify_failed;
}

int run_oracle(const OracleArgs& args) {
    const bool want_tree = args.strategy == "tree" || args.strategy == "both";
    const bool want_dedup = args.strategy == "dedup" || args.strategy == "both";

    std::vector<kummer::Integer> tree_counts, dedup_counts;
    for (int k = 0; k <= args.k_max; ++k) {
        if (want_tree)
            tree_counts.push_back(
                kummer::count_order_ideals(args.m, k, kummer::EnumStrategy::tree));
        if (want_dedup)
            dedup_counts.push_back(
                kummer::count_order_ideals(args.m, k, kummer::EnumStrategy::dedup));
    }
    if (want_tree && want_dedup && tree_counts != dedup_counts) {
        for (int k = 0; k <= args.k_max; ++k)
            if (tree_counts[static_cast<std::size_t>(k)] !=
                dedup_counts[static_cast<std::size_t>(k)]) {
                std::cerr << "strategy disagreement at m=" << args.m << ", k=" << k << ": tree "
                          << tree_counts[static_cast<std::size_t>(k)].str() << " vs dedup "
                          << dedup_counts[static_cast<std::size_t>(k)].str()
                          << " (this signals a bug)\n";
                break;
            }
        return exit_verify_failed;
    }

    const std::vector<kummer::Integer>& counts = want_tree ? tree_counts : dedup_counts;
    for (std::size_t k = 0; k < counts.size(); ++k)
        std::cout << (k == 0 ? "" : " ") << counts[k].str();
    std::cout << '\n';

    if (!args.cache_dir.empty()) {
        kummer::PartitionTable table{args.m, counts, kummer::TableSource::brute_force};
        kummer::PmCache cache{fs::path(args.cache_dir)};
        kummer::cache_store(table, cache.file_for(args.m));
        std::cerr << "stored P_" << args.m << " counts to " << cache.file_for(args.m).string()
                  << '\n';
    }
    return exit_ok;
}

int run_dt(const DtArgs& args) {
    if (args.format == "csv") {
        std::cout << "n,dt\n";
        for (int n = 1; n <= args.n_max; ++n)
            std::cout << n << ',' << rational_str(kummer::dt_degree_zero(n)) << '\n';
        return exit_ok;
    }
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    auto rows = nlohmann::ordered_json::array();
    for (int n = 1; n <= args.n_max; ++n)
        rows.push_back({{"n", n}, {"dt", rational_str(kummer::dt_degree_zero(n))}});
    doc["rows"] = std::move(rows);
    std::cout << doc.dump(2) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler characteristics of generalized Kummer schemes K_n(A x Y)"};
    app.require_subcommand(1);

    TableArgs table_args;
    CLI::App* table_cmd =
        app.add_subcommand("table", "chi(K_n) and the orbifold values for n = 1..n-max");
    table_cmd->add_option("--g", table_args.g, "dimension of the abelian variety (>= 1)");
    table_cmd->add_option("--r", table_args.r, "dimension of Y (>= 0)");
    table_cmd->add_option("--chi-y", table_args.chi_y, "Euler characteristic of Y (any integer)");
    table_cmd->add_option("--n-max", table_args.n_max, "number of points n to tabulate");
    table_cmd->add_option("--format", table_args.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--cache", table_args.cache_dir, "partition-table cache directory");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-check suites");
    verify_cmd->add_option("--n-max", verify_args.n_max, "depth of the route-agreement checks");
    verify_cmd->add_option("--suite", verify_args.suite, "which checks to run")
        ->check(CLI::IsMember({"series", "partitions", "weights", "kummer", "all"}));
    verify_cmd->add_option("--format", verify_args.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--cache", verify_args.cache_dir, "partition-table cache directory");

    OracleArgs oracle_args;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force counts of m-dimensional partitions");
    oracle_cmd->add_option("--m", oracle_args.m, "ambient dimension (>= 1)");
    oracle_cmd->add_option("--k-max", oracle_args.k_max, "largest size to count");
    oracle_cmd->add_option("--strategy", oracle_args.strategy, "enumeration strategy")
        ->check(CLI::IsMember({"tree", "dedup", "both"}));
    oracle_cmd->add_option("--cache", oracle_args.cache_dir,
                           "write the counts to this cache directory");

    DtArgs dt_args;
    CLI::App* dt_cmd =
        app.add_subcommand("dt", "degree-zero DT invariants of abelian 3-folds");
    dt_cmd->add_option("--n-max", dt_args.n_max, "number of invariants");
    dt_cmd->add_option("--format", dt_args.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*table_cmd) return run_table(table_args);
        if (*verify_cmd) return run_verify(verify_args);
        if (*oracle_cmd) return run_oracle(oracle_args);
        if (*dt_cmd) return run_dt(dt_args);
    } catch (const kummer::usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const kummer::integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return exit_data;
    } catch (const kummer::consistency_error& e) {
        std::cerr << "internal-consistency error: " << e.what() << '\n';
        return exit_data;
    } catch (const kummer::resource_error& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return exit_data;
    } catch (const kummer::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}
