#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

// Formal power series in t known through a fixed truncation order N, with
// exact rational coefficients. Every operation carries an explicit order;
// nothing silently extends or shortens a series. Instances are immutable
// after construction and safe to share across threads.
class TruncatedSeries {
public:
    // The zero series at the given order.
    explicit TruncatedSeries(int order);

    // Series with the given low-order coefficients; missing high coefficients
    // are zero. More than order+1 coefficients is a usage error.
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order);
    // c * t^k
    static TruncatedSeries monomial(const Rational& c, int k, int order);

    int order() const noexcept { return order_; }

    // Coefficient of t^n; usage error unless 0 <= n <= order.
    const Rational& coeff(int n) const;

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    // Explicit re-truncation to a lower order. Raising the order would
    // invent unknown coefficients and is a usage error.
    TruncatedSeries truncated(int new_order) const;

    bool operator==(const TruncatedSeries&) const = default;

    // Rendering like "1 + 3*t + 4/3*t^2 + O(t^3)", for diagnostics.
    std::string str() const;

private:
    int order_;
    std::vector<Rational> coeffs_; // coeffs_[k] holds [t^k]; size order_+1
};

// Coefficientwise sum/difference; both operands must have equal orders.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& h);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& h);

// Cauchy product truncated to the common order.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& h);

// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries inverse(const TruncatedSeries& f);

// Formal exponential of a series with zero constant term.
TruncatedSeries exp(const TruncatedSeries& f);

// Formal logarithm of a series with constant term 1.
TruncatedSeries log(const TruncatedSeries& f);

// f^e for any integer e, via repeated squaring; e < 0 requires a nonzero
// constant term. int_pow(f, 0) is the series 1.
TruncatedSeries int_pow(const TruncatedSeries& f, long long e);

// prod_{k=1..order} (1 - t^k)^{-e_k} truncated to the given order. Absent
// keys mean e_k = 0; keys beyond the order cannot affect the result.
TruncatedSeries product_form(const std::map<int, long long>& exponents, int order);
TruncatedSeries product_form(const std::function<long long(int)>& exponent, int order);

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& h);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& h);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& h);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f);

std::ostream& operator<<(std::ostream& out, const TruncatedSeries& f);

} // namespace kummer
