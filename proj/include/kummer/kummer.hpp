#pragma once

#include <vector>

#include "kummer/partitions.hpp"
#include "kummer/rational.hpp"
#include "kummer/weights.hpp"

namespace kummer {

// Input of the generalized Kummer construction for X = A x Y: the dimension
// g of the abelian variety A, the dimension r of Y, the Euler characteristic
// chi(Y) (any integer; Y may be open), and the truncation order. The engine
// never sees a concrete variety; chi(K_n(X)) depends on A only through g.
struct KummerParams {
    int g;
    int r;
    long long chi_y;
    int order;

    KummerParams(int g_, int r_, long long chi_y_, int order_);

    // ambient partition dimension of the punctual Hilbert contributions
    int m() const noexcept { return g + r; }
};

// chi(K_1..K_N) together with the orbifold values chi(K_n)/n^{2g}, which are
// the Euler characteristics of the quotient stacks [K_n / A[n]].
struct KummerTable {
    KummerParams params;
    std::vector<Integer> chi;       // chi[n], index-aligned; chi[0] unused
    std::vector<Rational> orbifold; // orbifold[n] * n^{2g} == chi[n] exactly
};

// sum_{d | n} d^s by trial division.
Integer divisor_sum(int n, int s);

// The main identity
//   exp( sum_{n>=1} chi(K_n)/n^{2g} t^n ) = ( sum_k P_{g+r}(k) t^k )^{chi(Y)},
// evaluated through log-linearity: chi(K_n) = n^{2g} chi(Y) [t^n] log F,
// where F is the P_{g+r} series. Every chi(K_n) must come out an integer;
// a non-integer raises consistency_error (it would mean an engine bug).
KummerTable kummer_euler_table(const KummerParams& params, PmCache& cache);

// chi(W^n_m) for n = 1..order from
//   exp( sum_{n>=1} chi(W^n_m)/n^2 t^n ) = sum_k P_{m+1}(k) t^k.
// m = 0 is the degenerate edge backed by the constant P_1 table; it makes
// the W-route total but has no independent ground truth.
std::vector<Integer> w_euler_series(int m, int order, PmCache& cache);

// Same invariant through the stratification sum
//   chi(W^n_m) = sum_alpha prod_i P_{m+1}(i)^{alpha_i} e(alpha).
Rational w_euler_partition_sum(int m, int n, PmCache& pm, WeightCache& weights);

// Second route to the main invariant: chi(K_n) = n^{2g-2} chi(Y) chi(W^n_{g+r-1}).
Rational kummer_euler_via_w(const KummerParams& params, int n, PmCache& pm,
                            WeightCache& weights);

// Closed forms for low dimensions:
//   g=2, Y a point:        chi(K_n) = n^3 sigma_1(n)
//   g=1, r=1:              chi(K_n) = chi(Y) n sigma_1(n)
//   dim X = g+r = 3:       chi(K_n) = chi(Y) n^{2g-1} sigma_2(n)
Integer closed_form_g2(int n);
Integer closed_form_g1r1(long long chi_y, int n);
Integer closed_form_dim3(int g, long long chi_y, int n);

// Degree-zero Donaldson-Thomas invariant of an abelian 3-fold:
//   DT_{n,0} = (-1)^{n-1}/n^6 * chi(K_n) = (-1)^{n-1}/n * sigma_2(n).
Rational dt_degree_zero(int n);

// chi(K_n)/n^{2g} = chi(Y) [t^n] log( sum_k P_{g+r}(k) t^k ).
Rational orbifold_euler(const KummerParams& params, int n, PmCache& cache);

} // namespace kummer
