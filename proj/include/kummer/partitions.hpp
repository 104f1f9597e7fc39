#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kummer/rational.hpp"
#include "kummer/series.hpp"

namespace kummer {

// An ordinary (2-dimensional) partition alpha of n in multiplicity form:
// multiplicities()[i-1] is the number of parts equal to i, and the vector
// has length exactly n, so sum_i i*alpha_i == n.
class PartitionMult {
public:
    PartitionMult(int n, std::vector<int> multiplicities);

    // The one-part partition (n^1).
    static PartitionMult single(int n);

    int n() const noexcept { return n_; }
    const std::vector<int>& multiplicities() const noexcept { return mult_; }

    // alpha_part for 1 <= part <= n.
    int multiplicity(int part) const;

    bool is_single() const; // alpha == (n^1)

    // Partition of n - part obtained by deleting one part of the given size;
    // usage error if the part is absent or the result would be empty.
    PartitionMult remove_part(int part) const;

    // Rendering like "1^2 3^1", for diagnostics.
    std::string str() const;

    auto operator<=>(const PartitionMult&) const = default;

private:
    int n_;
    std::vector<int> mult_;
};

// All partitions of n, each exactly once, largest-part-first order.
std::vector<PartitionMult> enumerate_partitions(int n);

using LatticePoint = std::vector<int>;

bool is_down_closed(int dim, const std::vector<LatticePoint>& points);

// A finite down-closed subset of N^m: one m-dimensional partition, realized
// as the set of lattice points it occupies. Points are kept lexicographically
// sorted.
class OrderIdeal {
public:
    OrderIdeal(int dim, std::vector<LatticePoint> points);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    bool contains(const LatticePoint& p) const;

    bool operator==(const OrderIdeal&) const = default;

private:
    int dim_;
    std::vector<LatticePoint> points_;
};

// Node budget for the brute-force enumerators; charge() throws resource_error
// once the limit is exceeded.
class EnumBudget {
public:
    explicit EnumBudget(std::uint64_t max_nodes) : limit_(max_nodes) {}
    void charge(std::uint64_t nodes = 1);
    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// The two independent brute-force strategies. `tree` walks the canonical-
// parent tree (duplicate-free by construction); `dedup` grows ideals by
// every addable corner and deduplicates canonical forms level by level.
// Disagreement between them signals a bug in one of the two.
enum class EnumStrategy { tree, dedup };

// Number of down-closed subsets of N^m with exactly k elements.
Integer count_order_ideals(int m, int k, EnumStrategy strategy = EnumStrategy::tree,
                           EnumBudget* budget = nullptr);

// Streams every order ideal of size k in N^m exactly once (tree order).
void enumerate_order_ideals(int m, int k, const std::function<void(const OrderIdeal&)>& visit);

enum class TableSource { product_formula, brute_force };

std::string to_string(TableSource source);
TableSource table_source_from_string(const std::string& name);

// Counts P_m(0..K) of m-dimensional partitions, with their provenance.
struct PartitionTable {
    int m = 0;
    std::vector<Integer> counts; // counts[k] == P_m(k)
    TableSource source = TableSource::brute_force;

    int k_max() const noexcept { return static_cast<int>(counts.size()) - 1; }

    // integrity_error unless m >= 1, counts[0] == 1, counts[1] == 1 (when
    // present) and every count is nonnegative.
    void validate() const;
};

// Atomic store (write temp file, then rename) of one table as a JSON
// document with decimal-string counts.
void cache_store(const PartitionTable& table, const std::filesystem::path& file);

// Load and validate; usage_error if the file holds a different dimension,
// integrity_error for anything malformed.
PartitionTable cache_load(int m, const std::filesystem::path& file);

// Provider of P_m tables and their generating series. m <= 3 come from the
// closed-form products, m >= 4 from the brute-force enumerator with optional
// per-dimension file caching under the configured directory.
class PmCache {
public:
    PmCache() = default;
    explicit PmCache(std::filesystem::path cache_dir);

    // Table for dimension m covering k = 0..k_max, extending (and for m >= 4
    // persisting) as needed.
    const PartitionTable& table(int m, int k_max);

    // sum_{k=0..order} P_m(k) t^k.
    TruncatedSeries series(int m, int order);

    // 0 means unlimited. The budget applies per extension; on exhaustion the
    // completed prefix is flushed to the cache file before resource_error.
    void set_node_budget(std::uint64_t limit) { node_budget_ = limit; }

    // Stream for progress notes when brute force kicks in; may be null.
    void set_diagnostics(std::ostream* out) { diag_ = out; }

    std::filesystem::path file_for(int m) const;

private:
    void extend(PartitionTable& table, int k_max);

    std::filesystem::path dir_; // empty: in-memory only
    std::map<int, PartitionTable> tables_;
    std::uint64_t node_budget_ = 0;
    std::ostream* diag_ = nullptr;
};

// Generating series of P_m through the given order.
TruncatedSeries pm_series(int m, int order, PmCache& cache);
TruncatedSeries pm_series(int m, int order);

} // namespace kummer
