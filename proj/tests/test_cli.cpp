// Contract tests for the command-line tool: output schemas, exit codes,
// cache behaviour. These drive the installed binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "kummer/rational.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "kummer_cli_XXXXXX").string();
        path = mkdtemp(tmpl.data());
    }
    ~TempDir() { fs::remove_all(path); }
};

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args) {
    TempDir dir;
    const fs::path out = dir.path / "out.txt";
    const fs::path err = dir.path / "err.txt";
    const std::string cmd = std::string("\"") + KUMMER_CLI_PATH + "\" " + args + " > \"" +
                            out.string() + "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_CASE("table json output") {
    TempDir cache;
    const RunResult r = run_cli("table --g 2 --r 0 --chi-y 1 --n-max 5 --format json --cache \"" +
                                cache.path.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["params"]["g"] == 2);
    CHECK(doc["params"]["r"] == 0);
    CHECK(doc["params"]["chi_y"] == 1);
    CHECK(doc["params"]["m"] == 2);
    REQUIRE(doc["rows"].size() == 5);
    const std::string expected_chi[] = {"1", "24", "108", "448", "750"};
    const std::string expected_orb[] = {"1/1", "3/2", "4/3", "7/4", "6/5"};
    for (int i = 0; i < 5; ++i) {
        CHECK(doc["rows"][i]["n"] == i + 1);
        CHECK(doc["rows"][i]["chi_kn"] == expected_chi[i]);
        CHECK(doc["rows"][i]["orbifold"] == expected_orb[i]);
    }
}

TEST_CASE("json and csv carry identical values") {
    TempDir cache;
    const std::string flags =
        "--g 1 --r 2 --chi-y 2 --n-max 4 --cache \"" + cache.path.string() + "\"";
    const RunResult json_run = run_cli("table " + flags + " --format json");
    const RunResult csv_run = run_cli("table " + flags + " --format csv");
    REQUIRE(json_run.exit_code == 0);
    REQUIRE(csv_run.exit_code == 0);

    const nlohmann::json doc = nlohmann::json::parse(json_run.out);
    const auto rows = parse_csv(csv_run.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"g", "r", "chi_y", "n", "chi_kn", "orbifold"});
    const std::string expected_chi[] = {"2", "20", "60", "168"};
    for (int i = 0; i < 4; ++i) {
        CHECK(rows[i + 1][0] == "1");
        CHECK(rows[i + 1][1] == "2");
        CHECK(rows[i + 1][2] == "2");
        CHECK(rows[i + 1][3] == std::to_string(i + 1));
        CHECK(rows[i + 1][4] == expected_chi[i]);
        CHECK(doc["rows"][i]["chi_kn"] == rows[i + 1][4]);
        CHECK(doc["rows"][i]["orbifold"] == rows[i + 1][5]);
    }
}

TEST_CASE("table with chi_y = 0") {
    TempDir cache;
    const RunResult r = run_cli("table --g 1 --r 1 --chi-y 0 --n-max 3 --format csv --cache \"" +
                                cache.path.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    for (int i = 1; i <= 3; ++i) {
        CHECK(rows[static_cast<std::size_t>(i)][4] == "0");
        CHECK(rows[static_cast<std::size_t>(i)][5] == "0/1");
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("table --g 0 --n-max 3").exit_code == 2);       // invalid g
    CHECK(run_cli("table --n-max 0").exit_code == 2);             // invalid order
    CHECK(run_cli("table --no-such-flag").exit_code == 2);        // unknown flag
    CHECK(run_cli("table --format yaml").exit_code == 2);         // bad enum
    CHECK(run_cli("").exit_code == 2);                            // missing subcommand
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output strings parse back to the exact values") {
    TempDir cache;
    const RunResult r = run_cli("table --g 2 --r 0 --chi-y 1 --n-max 6 --cache \"" +
                                cache.path.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    for (const auto& row : doc["rows"]) {
        const kummer::Integer chi(row["chi_kn"].get<std::string>());
        const kummer::Rational orb(row["orbifold"].get<std::string>());
        const int n = row["n"].get<int>();
        CHECK(orb * kummer::Rational(kummer::integer_pow(kummer::Integer(n), 4u)) ==
              kummer::Rational(chi));
    }
}

TEST_CASE("oracle") {
    SUBCASE("MacMahon digits") {
        const RunResult r = run_cli("oracle --m 3 --k-max 6");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1 1 3 6 13 24 48\n");
    }
    SUBCASE("chains") {
        const RunResult r = run_cli("oracle --m 1 --k-max 5");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1 1 1 1 1 1\n");
    }
    SUBCASE("dual strategies agree on solid partitions") {
        const RunResult r = run_cli("oracle --m 4 --k-max 5 --strategy both");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1 1 4 10 26 59\n");
    }
    SUBCASE("writes the cache when asked") {
        TempDir dir;
        const RunResult r =
            run_cli("oracle --m 4 --k-max 4 --cache \"" + dir.path.string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(fs::exists(dir.path / "pm_4.json"));
    }
    SUBCASE("invalid dimension is a usage error") {
        CHECK(run_cli("oracle --m 0 --k-max 3").exit_code == 2);
    }
}

TEST_CASE("dt") {
    const RunResult json_run = run_cli("dt --n-max 3 --format json");
    REQUIRE(json_run.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json_run.out);
    CHECK(doc["rows"][0]["dt"] == "1/1");
    CHECK(doc["rows"][1]["dt"] == "-5/2");
    CHECK(doc["rows"][2]["dt"] == "10/3");

    const RunResult csv_run = run_cli("dt --n-max 3 --format csv");
    const auto rows = parse_csv(csv_run.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"n", "dt"});
    for (int i = 0; i < 3; ++i)
        CHECK(doc["rows"][i]["dt"] == rows[static_cast<std::size_t>(i + 1)][1]);
}

TEST_CASE("verify") {
    TempDir cache;
    SUBCASE("weights suite passes") {
        const RunResult r = run_cli("verify --suite weights --n-max 6 --cache \"" +
                                    cache.path.string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("[PASS] weights.prop42_equivalence") != std::string::npos);
        CHECK(r.out.find("verification passed") != std::string::npos);
    }
    SUBCASE("series suite in json") {
        const RunResult r = run_cli("verify --suite series --n-max 6 --format json --cache \"" +
                                    cache.path.string() + "\"");
        CHECK(r.exit_code == 0);
        const nlohmann::json doc = nlohmann::json::parse(r.out);
        CHECK(doc["all_pass"] == true);
        CHECK(doc["checks"].size() == 5);
    }
    SUBCASE("the full suite passes at a shallow depth") {
        const RunResult r =
            run_cli("verify --suite all --n-max 5 --cache \"" + cache.path.string() + "\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("verification passed: 24/24") != std::string::npos);
    }
    SUBCASE("corrupted cache exits with code 3") {
        std::ofstream(cache.path / "pm_4.json") << "{ garbage";
        const RunResult table_run = run_cli("table --g 4 --r 0 --chi-y 1 --n-max 3 --cache \"" +
                                            cache.path.string() + "\"");
        CHECK(table_run.exit_code == 3);
        CHECK(table_run.err.find("integrity error") != std::string::npos);
        const RunResult verify_run = run_cli("verify --suite kummer --n-max 4 --cache \"" +
                                             cache.path.string() + "\"");
        CHECK(verify_run.exit_code == 3);
    }
}

TEST_CASE("warm cache gives byte-identical output") {
    TempDir cache;
    const std::string invocation = "table --g 4 --r 0 --chi-y 1 --n-max 6 --format json --cache \"" +
                                   cache.path.string() + "\"";
    const RunResult cold = run_cli(invocation);
    REQUIRE(cold.exit_code == 0);
    CHECK(fs::exists(cache.path / "pm_4.json"));
    const RunResult warm1 = run_cli(invocation);
    const RunResult warm2 = run_cli(invocation);
    CHECK(warm1.exit_code == 0);
    CHECK(cold.out == warm1.out);
    CHECK(warm1.out == warm2.out);
    CHECK(warm1.err == warm2.err);
    CHECK(warm1.err.empty()); // no brute-force note once warm
}
