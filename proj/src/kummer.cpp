#include "kummer/kummer.hpp"

#include <string>

#include "kummer/series.hpp"

namespace kummer {

KummerParams::KummerParams(int g_, int r_, long long chi_y_, int order_)
    : g(g_), r(r_), chi_y(chi_y_), order(order_) {
    if (g < 1) throw usage_error("KummerParams: g must be at least 1");
    if (r < 0) throw usage_error("KummerParams: r must be nonnegative");
    if (order < 1) throw usage_error("KummerParams: order must be at least 1");
}

Integer divisor_sum(int n, int s) {
    if (n < 1) throw usage_error("divisor_sum: n must be positive");
    if (s < 0) throw usage_error("divisor_sum: exponent must be nonnegative");
    Integer total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += integer_pow(Integer(d), static_cast<unsigned>(s));
    return total;
}

KummerTable kummer_euler_table(const KummerParams& params, PmCache& cache) {
    const int N = params.order;
    const TruncatedSeries lg = log(cache.series(params.m(), N));

    KummerTable table{params, {}, {}};
    table.chi.assign(static_cast<std::size_t>(N) + 1, Integer(0));
    table.orbifold.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int n = 1; n <= N; ++n) {
        const Rational orb = Rational(params.chi_y) * lg.coeff(n);
        const Rational chi = orb * Rational(integer_pow(Integer(n), static_cast<unsigned>(2 * params.g)));
        if (!is_integer(chi))
            throw consistency_error("kummer_euler_table: chi(K_" + std::to_string(n) +
                                    ") = " + chi.str() + " is not an integer (engine bug)");
        table.orbifold[static_cast<std::size_t>(n)] = orb;
        table.chi[static_cast<std::size_t>(n)] = numerator(chi);
    }
    return table;
}

std::vector<Integer> w_euler_series(int m, int order, PmCache& cache) {
    if (m < 0) throw usage_error("w_euler_series: m must be nonnegative");
    if (order < 1) throw usage_error("w_euler_series: order must be at least 1");
    const TruncatedSeries lg = log(cache.series(m + 1, order));
    std::vector<Integer> chi(static_cast<std::size_t>(order) + 1, Integer(0));
    for (int n = 1; n <= order; ++n) {
        const Rational value = Rational(n) * n * lg.coeff(n);
        if (!is_integer(value))
            throw consistency_error("w_euler_series: chi(W^" + std::to_string(n) + "_" +
                                    std::to_string(m) + ") = " + value.str() +
                                    " is not an integer (engine bug)");
        chi[static_cast<std::size_t>(n)] = numerator(value);
    }
    return chi;
}

Rational w_euler_partition_sum(int m, int n, PmCache& pm, WeightCache& weights) {
    if (m < 0) throw usage_error("w_euler_partition_sum: m must be nonnegative");
    if (n < 1) throw usage_error("w_euler_partition_sum: n must be positive");
    const PartitionTable& t = pm.table(m + 1, n);
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) b.emplace_back(t.counts[static_cast<std::size_t>(k)]);
    return a_from_b_partition_sum(b, n, weights);
}

Rational kummer_euler_via_w(const KummerParams& params, int n, PmCache& pm,
                            WeightCache& weights) {
    if (n < 1) throw usage_error("kummer_euler_via_w: n must be positive");
    // chi(W) through the stratification sum, so this route shares no series
    // arithmetic with kummer_euler_table
    const int m = params.g + params.r - 1;
    const Rational w = w_euler_partition_sum(m, n, pm, weights);
    return Rational(params.chi_y) *
           Rational(integer_pow(Integer(n), static_cast<unsigned>(2 * params.g - 2))) * w;
}

Integer closed_form_g2(int n) {
    if (n < 1) throw usage_error("closed_form_g2: n must be positive");
    return integer_pow(Integer(n), 3u) * divisor_sum(n, 1);
}

Integer closed_form_g1r1(long long chi_y, int n) {
    if (n < 1) throw usage_error("closed_form_g1r1: n must be positive");
    return Integer(chi_y) * n * divisor_sum(n, 1);
}

Integer closed_form_dim3(int g, long long chi_y, int n) {
    if (g < 1) throw usage_error("closed_form_dim3: g must be at least 1");
    if (n < 1) throw usage_error("closed_form_dim3: n must be positive");
    return Integer(chi_y) * integer_pow(Integer(n), static_cast<unsigned>(2 * g - 1)) * divisor_sum(n, 2);
}

Rational dt_degree_zero(int n) {
    if (n < 1) throw usage_error("dt_degree_zero: n must be positive");
    const Integer numerator = (n % 2 == 1 ? 1 : -1) * divisor_sum(n, 2);
    return Rational(numerator, Integer(n));
}

Rational orbifold_euler(const KummerParams& params, int n, PmCache& cache) {
    if (n < 1 || n > params.order)
        throw usage_error("orbifold_euler: n outside [1, order]");
    const TruncatedSeries lg = log(cache.series(params.m(), n));
    return Rational(params.chi_y) * lg.coeff(n);
}

} // namespace kummer
