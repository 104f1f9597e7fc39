#include "kummer/series.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace kummer {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& h, const char* op) {
    if (f.order() != h.order())
        throw usage_error(std::string(op) + ": truncation orders differ (" +
                          std::to_string(f.order()) + " vs " + std::to_string(h.order()) +
                          "); re-truncate explicitly first");
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw usage_error("TruncatedSeries: order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : order_(order) {
    if (order < 0) throw usage_error("TruncatedSeries: order must be nonnegative");
    if (coeffs.size() > static_cast<std::size_t>(order) + 1)
        throw usage_error("TruncatedSeries: " + std::to_string(coeffs.size()) +
                          " coefficients exceed order " + std::to_string(order));
    coeffs_ = std::move(coeffs);
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int k, int order) {
    if (k < 0 || k > order)
        throw usage_error("monomial: degree " + std::to_string(k) + " outside order " +
                          std::to_string(order));
    TruncatedSeries s(order);
    s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
}

const Rational& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order_)
        throw usage_error("coeff: index " + std::to_string(n) + " outside [0, " +
                          std::to_string(order_) + "]");
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw usage_error("truncated: cannot extend order " + std::to_string(order_) +
                          " to " + std::to_string(new_order));
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return TruncatedSeries(new_order, std::move(c));
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) out << " + ";
        if (k == 0 || c != 1) {
            out << c.str();
            if (k > 0) out << "*";
        }
        if (k == 1) out << "t";
        if (k > 1) out << "t^" << k;
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^" << order_ + 1 << ")";
    return out.str();
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& h) {
    require_same_order(f, h, "add");
    std::vector<Rational> c(f.coeffs());
    for (int k = 0; k <= f.order(); ++k) c[static_cast<std::size_t>(k)] += h.coeff(k);
    return TruncatedSeries(f.order(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& h) {
    require_same_order(f, h, "sub");
    std::vector<Rational> c(f.coeffs());
    for (int k = 0; k <= f.order(); ++k) c[static_cast<std::size_t>(k)] -= h.coeff(k);
    return TruncatedSeries(f.order(), std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& h) {
    require_same_order(f, h, "mul");
    const int n = f.order();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (h.coeff(j) == 0) continue;
            c[static_cast<std::size_t>(i + j)] += f.coeff(i) * h.coeff(j);
        }
    }
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries inverse(const TruncatedSeries& f) {
    if (f.coeff(0) == 0)
        throw domain_error("inverse: constant term is zero");
    const int n = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
    g[0] = Rational(1) / f.coeff(0);
    // sum_{j=0..k} f_j g_{k-j} = 0 for k >= 1
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += f.coeff(j) * g[static_cast<std::size_t>(k - j)];
        g[static_cast<std::size_t>(k)] = -s / f.coeff(0);
    }
    return TruncatedSeries(n, std::move(g));
}

TruncatedSeries exp(const TruncatedSeries& f) {
    if (f.coeff(0) != 0)
        throw domain_error("exp: constant term must be zero");
    const int n = f.order();
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
    h[0] = 1;
    // h = exp(f) solves h' = f' h, i.e. k*h_k = sum_{j=1..k} j*f_j*h_{k-j}
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += j * f.coeff(j) * h[static_cast<std::size_t>(k - j)];
        h[static_cast<std::size_t>(k)] = s / k;
    }
    return TruncatedSeries(n, std::move(h));
}

TruncatedSeries log(const TruncatedSeries& h) {
    if (h.coeff(0) != 1)
        throw domain_error("log: constant term must be 1");
    const int n = h.order();
    std::vector<Rational> f(static_cast<std::size_t>(n) + 1);
    f[0] = 0;
    // the exp recurrence solved for f: f_k = h_k - (1/k) sum_{j=1..k-1} j*f_j*h_{k-j}
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int j = 1; j < k; ++j) s += j * f[static_cast<std::size_t>(j)] * h.coeff(k - j);
        f[static_cast<std::size_t>(k)] = h.coeff(k) - s / k;
    }
    return TruncatedSeries(n, std::move(f));
}

TruncatedSeries int_pow(const TruncatedSeries& f, long long e) {
    if (e == 0) return TruncatedSeries::one(f.order());
    TruncatedSeries base = f;
    unsigned long long k;
    if (e < 0) {
        if (f.coeff(0) == 0)
            throw domain_error("int_pow: negative exponent needs a nonzero constant term");
        base = inverse(f);
        k = static_cast<unsigned long long>(-(e + 1)) + 1ULL;
    } else {
        k = static_cast<unsigned long long>(e);
    }
    TruncatedSeries acc = TruncatedSeries::one(f.order());
    while (k != 0) {
        if (k & 1ULL) acc = mul(acc, base);
        k >>= 1ULL;
        if (k != 0) base = mul(base, base);
    }
    return acc;
}

TruncatedSeries product_form(const std::function<long long(int)>& exponent, int order) {
    TruncatedSeries result = TruncatedSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        const long long e = exponent(k);
        if (e == 0) continue;
        TruncatedSeries factor =
            sub(TruncatedSeries::one(order), TruncatedSeries::monomial(1, k, order));
        result = mul(result, int_pow(factor, -e));
    }
    return result;
}

TruncatedSeries product_form(const std::map<int, long long>& exponents, int order) {
    return product_form(
        [&exponents](int k) -> long long {
            auto it = exponents.find(k);
            return it == exponents.end() ? 0 : it->second;
        },
        order);
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& h) { return add(f, h); }
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& h) { return sub(f, h); }
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& h) { return mul(f, h); }

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) {
    std::vector<Rational> out(f.coeffs());
    for (Rational& x : out) x *= c;
    return TruncatedSeries(f.order(), std::move(out));
}

std::ostream& operator<<(std::ostream& out, const TruncatedSeries& f) { return out << f.str(); }

} // namespace kummer
