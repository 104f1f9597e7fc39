#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kummer/partitions.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// Memo table for the recursive partition weights e(alpha), keyed on the
// canonical multiplicity vector. Values are pure functions of alpha, so
// recomputation is always safe; a cache may be reused across different n.
class WeightCache {
public:
    const Rational* find(const PartitionMult& alpha) const;
    void store(const PartitionMult& alpha, Rational value);
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::map<PartitionMult, Rational> values_;
};

// The weight e(alpha) of a partition of n, defined by the recursion
//   e((n^1)) = n^2,
//   e(alpha) = - sum_i n/(n-i) * e(alpha with one part of size i deleted)
// for alpha != (n^1), where i ranges over the distinct part sizes present
// in alpha (each counted once, regardless of multiplicity).
Rational e_weight(const PartitionMult& alpha, WeightCache& cache);

// Same recursion without memoization; used to cross-check the cached path.
Rational e_weight(const PartitionMult& alpha);

// A pair of sequences coupled by  exp(sum_{n>=1} a_n/n^2 t^n) = sum_k b_k t^k.
// Both vectors are index-aligned: a[n] holds a_n (a[0] = 0) and b[k] holds
// b_k (b[0] = 1).
struct SequencePair {
    std::vector<Rational> a;
    std::vector<Rational> b;

    static SequencePair from_b(std::vector<Rational> b);
    void validate() const;
};

// a_n = sum over partitions alpha of n of e(alpha) * prod_i b_i^{alpha_i}.
// b must be defined through index n with b[0] == 1.
Rational a_from_b_partition_sum(const std::vector<Rational>& b, int n, WeightCache& cache);
Rational a_from_b_partition_sum(const std::vector<Rational>& b, int n);

// a_n = n^2 * [t^n] log(sum_k b_k t^k) for n = 1..N, where N = b.size()-1.
// Returns the index-aligned vector with a[0] = 0.
std::vector<Rational> a_from_b_series(const std::vector<Rational>& b);

// Coefficients of exp(sum_{n>=1} a_n/n^2 t^n); a[0] is ignored. b[0] == 1.
std::vector<Rational> b_from_a(const std::vector<Rational>& a);

} // namespace kummer
