#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "kummer/partitions.hpp"
#include "kummer/weights.hpp"

namespace kummer {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    long long first_failure_index = -1; // n or k of the first disagreement
    std::string detail; // names the disagreeing routes when pass == false
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    int n_max = 12;             // depth of route-agreement and equivalence checks
    int closed_form_n_max = 20; // depth of the closed-form comparisons
    int oracle_k_max = 10;      // product vs brute force
    int strategy_k_max = 8;     // dual-strategy agreement, m <= 4
    int max_dim = 4;            // grid runs over g >= 1, r >= 0, g + r <= max_dim
    int random_sequences = 50;
    std::uint64_t seed = 2718281828ULL;
};

using EWeightFn = std::function<Rational(const PartitionMult&)>;
using ExponentFn = std::function<long long(int)>;

// Partition-sum route vs series route on random integer sequences b. A
// non-default weight function replaces e(alpha); the hook lets tests inject
// a fault and watch the reporting path catch it.
CheckResult check_prop42_equivalence(const VerifyOptions& opts, EWeightFn weight_override = {});

// Brute-force order-ideal counts vs the Euler product (m = 2) and the
// MacMahon product (m = 3). A non-default exponent map replaces the MacMahon
// exponents e_k = k; same fault-injection purpose as above.
CheckResult check_product_vs_bruteforce(int k_max, ExponentFn macmahon_exponents = {});

VerifyReport verify_series(const VerifyOptions& opts);
VerifyReport verify_partitions(const VerifyOptions& opts);
VerifyReport verify_weights(const VerifyOptions& opts);
VerifyReport verify_kummer(const VerifyOptions& opts, PmCache& cache);

// Every cross-check the engine knows, in a fixed order independent of
// scheduling: series, partitions, weights, kummer.
VerifyReport verify_all(const VerifyOptions& opts, PmCache& cache);

void print_report(const VerifyReport& report, std::ostream& out);

} // namespace kummer
