#include "kummer/partitions.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace fs = std::filesystem;

namespace kummer {

PartitionMult::PartitionMult(int n, std::vector<int> multiplicities)
    : n_(n), mult_(std::move(multiplicities)) {
    if (n_ < 1) throw usage_error("PartitionMult: n must be positive");
    if (mult_.size() != static_cast<std::size_t>(n_))
        throw usage_error("PartitionMult: multiplicity vector must have length exactly n");
    long long total = 0;
    for (int i = 1; i <= n_; ++i) {
        if (mult_[static_cast<std::size_t>(i - 1)] < 0)
            throw usage_error("PartitionMult: negative multiplicity");
        total += static_cast<long long>(i) * mult_[static_cast<std::size_t>(i - 1)];
    }
    if (total != n_)
        throw usage_error("PartitionMult: multiplicities sum to " + std::to_string(total) +
                          ", expected " + std::to_string(n_));
}

PartitionMult PartitionMult::single(int n) {
    if (n < 1) throw usage_error("PartitionMult::single: n must be positive");
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    mult.back() = 1;
    return PartitionMult(n, std::move(mult));
}

int PartitionMult::multiplicity(int part) const {
    if (part < 1 || part > n_)
        throw usage_error("multiplicity: part " + std::to_string(part) + " outside [1, " +
                          std::to_string(n_) + "]");
    return mult_[static_cast<std::size_t>(part - 1)];
}

bool PartitionMult::is_single() const { return mult_.back() == 1; }

PartitionMult PartitionMult::remove_part(int part) const {
    if (multiplicity(part) < 1)
        throw usage_error("remove_part: no part of size " + std::to_string(part) + " in " + str());
    if (part == n_)
        throw usage_error("remove_part: deleting the only part would leave an empty partition");
    // the remaining parts sum to n - part, so none exceeds it and the
    // multiplicity vector truncates cleanly
    std::vector<int> mult = mult_;
    mult[static_cast<std::size_t>(part - 1)] -= 1;
    mult.resize(static_cast<std::size_t>(n_ - part));
    return PartitionMult(n_ - part, std::move(mult));
}

std::string PartitionMult::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= n_; ++i) {
        const int a = mult_[static_cast<std::size_t>(i - 1)];
        if (a == 0) continue;
        if (!first) out << ' ';
        out << i << '^' << a;
        first = false;
    }
    return out.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& mult,
                    std::vector<PartitionMult>& out, int n) {
    if (remaining == 0) {
        out.emplace_back(n, mult);
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        ++mult[static_cast<std::size_t>(part - 1)];
        partitions_rec(remaining - part, part, mult, out, n);
        --mult[static_cast<std::size_t>(part - 1)];
    }
}

} // namespace

std::vector<PartitionMult> enumerate_partitions(int n) {
    if (n < 1) throw usage_error("enumerate_partitions: n must be positive");
    std::vector<PartitionMult> out;
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    partitions_rec(n, n, mult, out, n);
    return out;
}

bool is_down_closed(int dim, const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    for (const LatticePoint& p : sorted) {
        if (static_cast<int>(p.size()) != dim) return false;
        for (int i = 0; i < dim; ++i) {
            if (p[static_cast<std::size_t>(i)] < 0) return false;
            if (p[static_cast<std::size_t>(i)] == 0) continue;
            LatticePoint pred = p;
            --pred[static_cast<std::size_t>(i)];
            if (!std::binary_search(sorted.begin(), sorted.end(), pred)) return false;
        }
    }
    return true;
}

OrderIdeal::OrderIdeal(int dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
    if (dim_ < 1) throw usage_error("OrderIdeal: dimension must be positive");
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw usage_error("OrderIdeal: duplicate points");
    if (!is_down_closed(dim_, points_))
        throw usage_error("OrderIdeal: point set is not down-closed");
}

bool OrderIdeal::contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

void EnumBudget::charge(std::uint64_t nodes) {
    used_ += nodes;
    if (used_ > limit_)
        throw resource_error("enumeration budget of " + std::to_string(limit_) +
                             " nodes exhausted");
}

namespace {

// Growth candidates of a lex-sorted ideal: points outside it whose
// predecessors are all present, with every coordinate < coord_bound. Any
// ideal of size <= coord_bound stays inside that box, so the bound loses
// nothing.
std::vector<LatticePoint> addable_corners(int m, int coord_bound,
                                          const std::vector<LatticePoint>& pts) {
    std::set<LatticePoint> out;
    if (pts.empty()) {
        if (coord_bound > 0) out.insert(LatticePoint(static_cast<std::size_t>(m), 0));
        return {out.begin(), out.end()};
    }
    const auto in_ideal = [&pts](const LatticePoint& p) {
        return std::binary_search(pts.begin(), pts.end(), p);
    };
    for (const LatticePoint& p : pts) {
        for (int i = 0; i < m; ++i) {
            LatticePoint q = p;
            ++q[static_cast<std::size_t>(i)];
            if (q[static_cast<std::size_t>(i)] >= coord_bound) continue;
            if (in_ideal(q)) continue;
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                if (q[static_cast<std::size_t>(j)] == 0) continue;
                LatticePoint pred = q;
                --pred[static_cast<std::size_t>(j)];
                ok = in_ideal(pred);
            }
            if (ok) out.insert(std::move(q));
        }
    }
    return {out.begin(), out.end()};
}

// Canonical-parent tree walk. Deleting the lex-largest maximal element of a
// nonempty ideal yields its unique parent; conversely the valid children of
// an ideal are exactly the corner additions lex-greater than the pivot (the
// point whose deletion recovers the current node). Every ideal of size
// <= k_max is therefore visited exactly once, no hashing required.
void tree_walk(int m, int k_max, std::vector<LatticePoint>& pts, const LatticePoint* pivot,
               EnumBudget* budget,
               const std::function<void(const std::vector<LatticePoint>&)>& visit) {
    if (budget != nullptr) budget->charge();
    visit(pts);
    if (static_cast<int>(pts.size()) >= k_max) return;
    for (const LatticePoint& x : addable_corners(m, k_max, pts)) {
        if (pivot != nullptr && !(*pivot < x)) continue;
        pts.insert(std::lower_bound(pts.begin(), pts.end(), x), x);
        tree_walk(m, k_max, pts, &x, budget, visit);
        pts.erase(std::lower_bound(pts.begin(), pts.end(), x));
    }
}

Integer count_tree(int m, int k, EnumBudget* budget) {
    Integer count = 0;
    std::vector<LatticePoint> pts;
    tree_walk(m, k, pts, nullptr, budget,
              [&count, k](const std::vector<LatticePoint>& ideal) {
                  if (static_cast<int>(ideal.size()) == k) ++count;
              });
    return count;
}

Integer count_dedup(int m, int k, EnumBudget* budget) {
    std::set<std::vector<LatticePoint>> level;
    level.emplace();
    for (int size = 0; size < k; ++size) {
        std::set<std::vector<LatticePoint>> next;
        for (const std::vector<LatticePoint>& ideal : level) {
            for (const LatticePoint& x : addable_corners(m, k, ideal)) {
                if (budget != nullptr) budget->charge();
                std::vector<LatticePoint> grown = ideal;
                grown.insert(std::lower_bound(grown.begin(), grown.end(), x), x);
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return Integer(level.size());
}

} // namespace

Integer count_order_ideals(int m, int k, EnumStrategy strategy, EnumBudget* budget) {
    if (m < 1) throw usage_error("count_order_ideals: dimension must be positive");
    if (k < 0) throw usage_error("count_order_ideals: size must be nonnegative");
    if (k == 0) return 1; // the empty ideal
    if (m == 1) return 1; // chains in N
    switch (strategy) {
    case EnumStrategy::tree: return count_tree(m, k, budget);
    case EnumStrategy::dedup: return count_dedup(m, k, budget);
    }
    throw usage_error("count_order_ideals: unknown strategy");
}

void enumerate_order_ideals(int m, int k,
                            const std::function<void(const OrderIdeal&)>& visit) {
    if (m < 1) throw usage_error("enumerate_order_ideals: dimension must be positive");
    if (k < 0) throw usage_error("enumerate_order_ideals: size must be nonnegative");
    if (k == 0) {
        visit(OrderIdeal(m, {}));
        return;
    }
    std::vector<LatticePoint> pts;
    tree_walk(m, k, pts, nullptr, nullptr,
              [&visit, m, k](const std::vector<LatticePoint>& ideal) {
                  if (static_cast<int>(ideal.size()) == k) visit(OrderIdeal(m, ideal));
              });
}

std::string to_string(TableSource source) {
    switch (source) {
    case TableSource::product_formula: return "product_formula";
    case TableSource::brute_force: return "brute_force";
    }
    throw usage_error("to_string: unknown table source");
}

TableSource table_source_from_string(const std::string& name) {
    if (name == "product_formula") return TableSource::product_formula;
    if (name == "brute_force") return TableSource::brute_force;
    throw integrity_error("unknown table source \"" + name + "\"");
}

void PartitionTable::validate() const {
    if (m < 1) throw integrity_error("partition table: dimension must be positive");
    if (counts.empty()) throw integrity_error("partition table: no counts");
    if (counts[0] != 1)
        throw integrity_error("partition table: P_" + std::to_string(m) + "(0) = " +
                              counts[0].str() + ", expected 1");
    if (counts.size() > 1 && counts[1] != 1)
        throw integrity_error("partition table: P_" + std::to_string(m) + "(1) = " +
                              counts[1].str() + ", expected 1");
    for (const Integer& c : counts)
        if (c < 0) throw integrity_error("partition table: negative count");
}

void cache_store(const PartitionTable& table, const fs::path& file) {
    table.validate();
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["m"] = table.m;
    doc["source"] = to_string(table.source);
    std::vector<std::string> counts;
    counts.reserve(table.counts.size());
    for (const Integer& c : table.counts) counts.push_back(c.str());
    doc["counts"] = counts;

    if (file.has_parent_path()) fs::create_directories(file.parent_path());
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw integrity_error("cache_store: cannot write " + tmp.string());
        out << doc.dump(2) << '\n';
    }
    fs::rename(tmp, file);
}

PartitionTable cache_load(int m, const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw integrity_error("cache_load: cannot read " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw integrity_error("cache_load: " + file.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version") ||
        !doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != 1)
        throw integrity_error("cache_load: " + file.string() + " has missing or unsupported schema_version");
    if (!doc.contains("m") || !doc["m"].is_number_integer())
        throw integrity_error("cache_load: " + file.string() + " lacks an integer field m");
    const int file_m = doc["m"].get<int>();
    if (file_m != m)
        throw usage_error("cache_load: " + file.string() + " holds dimension " +
                          std::to_string(file_m) + ", requested " + std::to_string(m));
    if (!doc.contains("source") || !doc["source"].is_string())
        throw integrity_error("cache_load: " + file.string() + " lacks a source tag");
    if (!doc.contains("counts") || !doc["counts"].is_array())
        throw integrity_error("cache_load: " + file.string() + " lacks a counts array");

    PartitionTable table;
    table.m = file_m;
    table.source = table_source_from_string(doc["source"].get<std::string>());
    for (const auto& entry : doc["counts"]) {
        if (!entry.is_string())
            throw integrity_error("cache_load: counts must be decimal strings");
        try {
            table.counts.emplace_back(entry.get<std::string>());
        } catch (const std::exception&) {
            throw integrity_error("cache_load: count \"" + entry.get<std::string>() +
                                  "\" is not a decimal integer");
        }
    }
    table.validate();
    return table;
}

PmCache::PmCache(fs::path cache_dir) : dir_(std::move(cache_dir)) {}

fs::path PmCache::file_for(int m) const {
    return dir_ / ("pm_" + std::to_string(m) + ".json");
}

const PartitionTable& PmCache::table(int m, int k_max) {
    if (m < 1) throw usage_error("PmCache::table: dimension must be positive");
    if (k_max < 0) throw usage_error("PmCache::table: k_max must be nonnegative");
    PartitionTable& slot = tables_[m];
    if (slot.m == 0) {
        slot.m = m;
        slot.source = m <= 3 ? TableSource::product_formula : TableSource::brute_force;
        if (m >= 4 && !dir_.empty() && fs::exists(file_for(m)))
            slot = cache_load(m, file_for(m));
    }
    if (slot.k_max() < k_max) extend(slot, k_max);
    return slot;
}

void PmCache::extend(PartitionTable& table, int k_max) {
    const int m = table.m;
    if (m <= 3) {
        // closed forms: P_1 constant, P_2 Euler product, P_3 MacMahon product
        table.counts.clear();
        if (m == 1) {
            table.counts.assign(static_cast<std::size_t>(k_max) + 1, Integer(1));
        } else {
            const TruncatedSeries prod = product_form(
                [m](int k) -> long long { return m == 2 ? 1 : k; }, k_max);
            for (int k = 0; k <= k_max; ++k)
                table.counts.push_back(to_integer(prod.coeff(k)));
        }
        return;
    }

    if (diag_ != nullptr)
        *diag_ << "[pm] brute-force enumeration of P_" << m << " up to k=" << k_max
               << " (cached counts reach k=" << table.k_max() << ")\n";
    EnumBudget budget(node_budget_ == 0 ? UINT64_MAX : node_budget_);
    for (int k = table.k_max() + 1; k <= k_max; ++k) {
        Integer count;
        try {
            count = count_order_ideals(m, k, EnumStrategy::tree, &budget);
        } catch (const resource_error&) {
            // flush the completed prefix so a rerun can resume
            if (!dir_.empty() && !table.counts.empty()) cache_store(table, file_for(m));
            throw;
        }
        table.counts.push_back(std::move(count));
    }
    if (!dir_.empty()) cache_store(table, file_for(m));
}

TruncatedSeries PmCache::series(int m, int order) {
    const PartitionTable& t = table(m, order);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        coeffs.emplace_back(t.counts[static_cast<std::size_t>(k)]);
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries pm_series(int m, int order, PmCache& cache) { return cache.series(m, order); }

TruncatedSeries pm_series(int m, int order) {
    PmCache cache;
    return cache.series(m, order);
}

} // namespace kummer
