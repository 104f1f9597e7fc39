#include "kummer/weights.hpp"

#include <utility>

#include "kummer/series.hpp"

namespace kummer {

const Rational* WeightCache::find(const PartitionMult& alpha) const {
    auto it = values_.find(alpha);
    return it == values_.end() ? nullptr : &it->second;
}

void WeightCache::store(const PartitionMult& alpha, Rational value) {
    values_.emplace(alpha, std::move(value));
}

namespace {

Rational e_weight_impl(const PartitionMult& alpha, WeightCache* cache) {
    const int n = alpha.n();
    if (alpha.is_single()) return Rational(n) * n;
    if (cache != nullptr)
        if (const Rational* hit = cache->find(alpha)) return *hit;

    // alpha != (n^1), so every part present is strictly smaller than n
    Rational sum = 0;
    for (int i = 1; i < n; ++i) {
        if (alpha.multiplicity(i) == 0) continue;
        sum += Rational(n, n - i) * e_weight_impl(alpha.remove_part(i), cache);
    }
    Rational value = -sum;
    if (cache != nullptr) cache->store(alpha, value);
    return value;
}

void require_b(const std::vector<Rational>& b, int through) {
    if (static_cast<int>(b.size()) <= through)
        throw usage_error("sequence b must be defined through index " + std::to_string(through));
    if (b[0] != 1) throw usage_error("sequence b must have b_0 = 1");
}

} // namespace

Rational e_weight(const PartitionMult& alpha, WeightCache& cache) {
    return e_weight_impl(alpha, &cache);
}

Rational e_weight(const PartitionMult& alpha) { return e_weight_impl(alpha, nullptr); }

SequencePair SequencePair::from_b(std::vector<Rational> b) {
    SequencePair pair;
    pair.a = a_from_b_series(b);
    pair.b = std::move(b);
    return pair;
}

void SequencePair::validate() const {
    if (a.size() != b.size()) throw usage_error("SequencePair: a and b must be index-aligned");
    if (b.empty() || b[0] != 1) throw usage_error("SequencePair: b_0 must be 1");
    if (a[0] != 0) throw usage_error("SequencePair: a_0 must be 0");
}

Rational a_from_b_partition_sum(const std::vector<Rational>& b, int n, WeightCache& cache) {
    if (n < 1) throw usage_error("a_from_b_partition_sum: n must be positive");
    require_b(b, n);
    Rational total = 0;
    for (const PartitionMult& alpha : enumerate_partitions(n)) {
        Rational term = e_weight(alpha, cache);
        for (int i = 1; i <= n && term != 0; ++i) {
            const int a_i = alpha.multiplicity(i);
            if (a_i > 0) term *= rat_pow(b[static_cast<std::size_t>(i)], static_cast<unsigned>(a_i));
        }
        total += term;
    }
    return total;
}

Rational a_from_b_partition_sum(const std::vector<Rational>& b, int n) {
    WeightCache cache;
    return a_from_b_partition_sum(b, n, cache);
}

std::vector<Rational> a_from_b_series(const std::vector<Rational>& b) {
    require_b(b, 0);
    const int order = static_cast<int>(b.size()) - 1;
    const TruncatedSeries lg = log(TruncatedSeries(order, b));
    std::vector<Rational> a(b.size(), Rational(0));
    for (int n = 1; n <= order; ++n)
        a[static_cast<std::size_t>(n)] = Rational(n) * n * lg.coeff(n);
    return a;
}

std::vector<Rational> b_from_a(const std::vector<Rational>& a) {
    if (a.empty()) throw usage_error("b_from_a: sequence a must not be empty");
    const int order = static_cast<int>(a.size()) - 1;
    std::vector<Rational> coeffs(a.size(), Rational(0));
    for (int n = 1; n <= order; ++n)
        coeffs[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n)] / (Rational(n) * n);
    return exp(TruncatedSeries(order, std::move(coeffs))).coeffs();
}

} // namespace kummer
