#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "kummer/partitions.hpp"
#include "oracles.hpp"

using namespace kummer;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "kummer_test_XXXXXX").string();
        path = mkdtemp(tmpl.data());
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("PartitionMult basics") {
    const PartitionMult single = PartitionMult::single(5);
    CHECK(single.n() == 5);
    CHECK(single.multiplicity(5) == 1);
    CHECK(single.is_single());
    CHECK(single.str() == "5^1");

    const PartitionMult mixed(3, {1, 1, 0});
    CHECK(!mixed.is_single());
    CHECK(mixed.str() == "1^1 2^1");
    CHECK(mixed.remove_part(2) == PartitionMult(1, {1}));
    CHECK(mixed.remove_part(1) == PartitionMult(2, {0, 1}));
    CHECK_THROWS_AS(mixed.remove_part(3), usage_error);
    CHECK_THROWS_AS(PartitionMult(3, {1, 1, 1}), usage_error); // sums to 6
    CHECK_THROWS_AS(PartitionMult(3, {1, 1}), usage_error);    // wrong length
    CHECK_THROWS_AS(PartitionMult::single(3).remove_part(3), usage_error);
}

TEST_CASE("enumerate_partitions") {
    const auto one = enumerate_partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == PartitionMult::single(1));

    const auto three = enumerate_partitions(3);
    REQUIRE(three.size() == 3);
    const std::set<PartitionMult> expected = {
        PartitionMult(3, {0, 0, 1}), PartitionMult(3, {1, 1, 0}), PartitionMult(3, {3, 0, 0})};
    CHECK(std::set<PartitionMult>(three.begin(), three.end()) == expected);

    CHECK(enumerate_partitions(6).size() == 11);

    SUBCASE("counts match the independent recursion and the Euler product") {
        const TruncatedSeries p2 = pm_series(2, 20);
        for (int n = 1; n <= 20; ++n) {
            const auto parts = enumerate_partitions(n);
            CHECK(static_cast<long long>(parts.size()) == oracles::partition_count(n));
            CHECK(Rational(parts.size()) == p2.coeff(n));
            // no duplicates
            CHECK(std::set<PartitionMult>(parts.begin(), parts.end()).size() == parts.size());
        }
    }
}

TEST_CASE("OrderIdeal validation") {
    CHECK_NOTHROW(OrderIdeal(2, {{0, 0}, {0, 1}, {1, 0}}));
    CHECK_THROWS_AS(OrderIdeal(2, {{1, 0}}), usage_error);          // missing origin
    CHECK_THROWS_AS(OrderIdeal(2, {{0, 0}, {0, 0}}), usage_error);  // duplicate
    CHECK(OrderIdeal(3, {}).size() == 0);
    const OrderIdeal ideal(2, {{1, 0}, {0, 0}});
    CHECK(ideal.points() == std::vector<LatticePoint>{{0, 0}, {1, 0}}); // sorted
    CHECK(ideal.contains({1, 0}));
    CHECK(!ideal.contains({0, 1}));
}

TEST_CASE("count_order_ideals small cases") {
    CHECK(count_order_ideals(1, 9) == 1);
    CHECK(count_order_ideals(7, 0) == 1);
    CHECK(count_order_ideals(4, 2) == 4); // origin plus one unit vector
    CHECK(count_order_ideals(3, 3) == 6); // {0,e_i,e_j}: 3 ways; {0,e_i,2e_i}: 3 ways
    CHECK_THROWS_AS(count_order_ideals(0, 2), usage_error);
    CHECK_THROWS_AS(count_order_ideals(2, -1), usage_error);
}

TEST_CASE("enumerate_order_ideals") {
    SUBCASE("m=2, k=3: the three Young diagrams of 3") {
        std::set<std::vector<LatticePoint>> seen;
        enumerate_order_ideals(2, 3, [&](const OrderIdeal& ideal) {
            CHECK(ideal.size() == 3);
            seen.insert(ideal.points());
        });
        const std::set<std::vector<LatticePoint>> expected = {
            {{0, 0}, {1, 0}, {2, 0}},  // row
            {{0, 0}, {0, 1}, {0, 2}},  // column
            {{0, 0}, {0, 1}, {1, 0}}}; // hook
        CHECK(seen == expected);
    }

    SUBCASE("m=1, k=5: exactly the chain") {
        int emitted = 0;
        enumerate_order_ideals(1, 5, [&](const OrderIdeal& ideal) {
            ++emitted;
            CHECK(ideal.points() == std::vector<LatticePoint>{{0}, {1}, {2}, {3}, {4}});
        });
        CHECK(emitted == 1);
    }

    SUBCASE("m=3, k=4: 13 ideals, all down-closed, no duplicates") {
        std::set<std::vector<LatticePoint>> seen;
        enumerate_order_ideals(3, 4, [&](const OrderIdeal& ideal) {
            CHECK(is_down_closed(3, ideal.points()));
            seen.insert(ideal.points());
        });
        CHECK(seen.size() == 13);
    }
}

TEST_CASE("the two enumeration strategies agree") {
    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= 8; ++k)
            CHECK(count_order_ideals(m, k, EnumStrategy::tree) ==
                  count_order_ideals(m, k, EnumStrategy::dedup));
}

TEST_CASE("brute force matches the closed-form products") {
    const TruncatedSeries euler = pm_series(2, 10);
    const TruncatedSeries macmahon = pm_series(3, 10);
    for (int k = 0; k <= 10; ++k) {
        CHECK(Rational(count_order_ideals(2, k)) == euler.coeff(k));
        CHECK(Rational(count_order_ideals(3, k)) == macmahon.coeff(k));
    }
}

TEST_CASE("monotone in the dimension") {
    for (int m = 1; m <= 3; ++m)
        for (int k = 0; k <= 8; ++k)
            CHECK(count_order_ideals(m, k) <= count_order_ideals(m + 1, k));
}

TEST_CASE("pm_series") {
    SUBCASE("m=1 is the geometric series") {
        const TruncatedSeries s = pm_series(1, 4);
        for (int k = 0; k <= 4; ++k) CHECK(s.coeff(k) == 1);
    }
    SUBCASE("m=3 matches MacMahon") {
        const TruncatedSeries s = pm_series(3, 6);
        const long long expected[] = {1, 1, 3, 6, 13, 24, 48};
        for (int k = 0; k <= 6; ++k) CHECK(s.coeff(k) == expected[k]);
    }
    SUBCASE("m=4 from brute force") {
        const TruncatedSeries s = pm_series(4, 5);
        const long long expected[] = {1, 1, 4, 10, 26, 59};
        for (int k = 0; k <= 5; ++k) CHECK(s.coeff(k) == expected[k]);
    }
}

TEST_CASE("partition table cache") {
    TempDir dir;
    const fs::path file = dir.path / "pm_4.json";

    SUBCASE("store then load round-trips") {
        PmCache cache;
        PartitionTable table = cache.table(4, 6);
        cache_store(table, file);
        const PartitionTable loaded = cache_load(4, file);
        CHECK(loaded.m == table.m);
        CHECK(loaded.counts == table.counts);
        CHECK(loaded.source == table.source);
        CHECK(!fs::exists(file.string() + ".tmp")); // temp file renamed away
    }

    SUBCASE("dimension mismatch is a usage error") {
        PmCache cache;
        cache_store(cache.table(5, 3), file);
        CHECK_THROWS_AS(cache_load(4, file), usage_error);
    }

    SUBCASE("corrupt JSON is an integrity error") {
        std::ofstream(file) << "{ not json";
        CHECK_THROWS_AS(cache_load(4, file), integrity_error);
    }

    SUBCASE("violated invariants are integrity errors") {
        std::ofstream(file) << R"({"schema_version":1,"m":4,"source":"brute_force","counts":["2","1"]})";
        CHECK_THROWS_AS(cache_load(4, file), integrity_error);
        std::ofstream(file) << R"({"schema_version":1,"m":4,"source":"brute_force","counts":["1","7"]})";
        CHECK_THROWS_AS(cache_load(4, file), integrity_error);
        std::ofstream(file) << R"({"schema_version":2,"m":4,"source":"brute_force","counts":["1","1"]})";
        CHECK_THROWS_AS(cache_load(4, file), integrity_error);
        std::ofstream(file) << R"({"schema_version":1,"m":4,"source":"dunno","counts":["1","1"]})";
        CHECK_THROWS_AS(cache_load(4, file), integrity_error);
        std::ofstream(file) << R"({"schema_version":1,"m":4,"source":"brute_force","counts":["1","x"]})";
        CHECK_THROWS_AS(cache_load(4, file), integrity_error);
    }

    SUBCASE("PmCache persists m>=4 and reuses the file") {
        {
            PmCache cache(dir.path);
            cache.table(4, 5);
        }
        REQUIRE(fs::exists(file));
        const PartitionTable stored = cache_load(4, file);
        CHECK(stored.k_max() == 5);
        // a fresh cache picks the file up and extends it
        PmCache cache(dir.path);
        const PartitionTable& extended = cache.table(4, 7);
        CHECK(extended.k_max() >= 7);
        CHECK(extended.counts[5] == 59);
        CHECK(cache_load(4, file).k_max() >= 7);
    }
}

TEST_CASE("node budget") {
    SUBCASE("EnumBudget throws past the limit") {
        EnumBudget budget(3);
        budget.charge(3);
        CHECK_THROWS_AS(budget.charge(), resource_error);
    }

    SUBCASE("exhaustion flushes completed counts before raising") {
        TempDir dir;
        PmCache cache(dir.path);
        cache.set_node_budget(50); // enough for small k only
        CHECK_THROWS_AS(cache.table(4, 12), resource_error);
        REQUIRE(fs::exists(dir.path / "pm_4.json"));
        const PartitionTable partial = cache_load(4, dir.path / "pm_4.json");
        CHECK(partial.k_max() >= 0);
        CHECK(partial.k_max() < 12);
        CHECK(partial.counts[0] == 1);
        // an unbudgeted cache resumes from the flushed prefix
        PmCache resume(dir.path);
        CHECK(resume.table(4, 8).counts[8] == count_order_ideals(4, 8));
    }
}

TEST_CASE("table source tags") {
    PmCache cache;
    CHECK(cache.table(2, 5).source == TableSource::product_formula);
    CHECK(cache.table(4, 3).source == TableSource::brute_force);
    CHECK(to_string(TableSource::brute_force) == "brute_force");
    CHECK(table_source_from_string("product_formula") == TableSource::product_formula);
    CHECK_THROWS_AS(table_source_from_string("nope"), integrity_error);
}
