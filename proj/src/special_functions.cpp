#include "secst/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "secst/errors.hpp"

namespace secst {

namespace {

void check_order(int n, const char* fn) {
    if (n < 0 || n > kSpecialFnMaxOrder)
        throw EnvelopeError(std::string(fn) + ": order " + std::to_string(n) +
                            " outside supported range [0, " +
                            std::to_string(kSpecialFnMaxOrder) + "]");
}

void check_finite(double x, const char* fn) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(fn) + ": non-finite argument");
}

}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    // 0..20 from the exact integer factorials, log-gamma beyond.
    static const std::vector<double> table = [] {
        std::vector<double> t(21);
        std::uint64_t f = 1;
        t[0] = 0.0;
        for (int i = 1; i <= 20; ++i) {
            f *= static_cast<std::uint64_t>(i);
            t[i] = std::log(static_cast<double>(f));
        }
        return t;
    }();
    if (n <= 20) return table[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double laguerre(int m, double x) {
    check_order(m, "laguerre");
    check_finite(x, "laguerre");
    if (m == 0) return 1.0;
    // Extended precision buys back the digits lost near polynomial roots.
    const long double xl = x;
    long double prev = 1.0L;       // L_0
    long double cur = 1.0L - xl;   // L_1
    for (int k = 1; k < m; ++k) {
        const long double next = ((2.0L * k + 1.0L - xl) * cur - k * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return static_cast<double>(cur);
}

double assoc_laguerre(int n, int k, double x) {
    check_order(n, "assoc_laguerre");
    if (k < 0 || k > kSpecialFnMaxOrder)
        throw EnvelopeError("assoc_laguerre: superscript outside supported range");
    check_finite(x, "assoc_laguerre");
    if (n == 0) return 1.0;
    const long double xl = x;
    long double prev = 1.0L;             // L_0^k
    long double cur = 1.0L + k - xl;     // L_1^k
    for (int j = 1; j < n; ++j) {
        const long double next = ((2.0L * j + k + 1.0L - xl) * cur - (j + k) * prev) / (j + 1.0L);
        prev = cur;
        cur = next;
    }
    return static_cast<double>(cur);
}

Complex hermite(int n, Complex z) {
    check_order(n, "hermite");
    if (n == 0) return {1.0, 0.0};
    Complex prev{1.0, 0.0};
    Complex cur = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const Complex next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace detail {

double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

namespace {

struct PolarArg {
    double log_abs;    // -inf for zero
    Complex unit;      // phase, or 1 for zero
};

PolarArg polar_arg(Complex z) {
    const double a = std::abs(z);
    if (a == 0.0) return {-std::numeric_limits<double>::infinity(), Complex(1.0, 0.0)};
    return {std::log(a), z / a};
}

}

ScaledComplex hermite2_scaled(int m, int n, Complex x, Complex y) {
    if (m < 0 || n < 0 || m > kFockIndexMax || n > kFockIndexMax)
        throw EnvelopeError("hermite2: index outside supported range");
    if (m == 0 && n == 0) return {Complex(1.0, 0.0), 0.0};

    const PolarArg px = polar_arg(x);
    const PolarArg py = polar_arg(y);

    // Pure powers when either index is zero.
    if (m == 0) {
        if (y == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), 0.0};
        Complex ph = Complex(1.0, 0.0);
        for (int i = 0; i < n; ++i) ph *= py.unit;
        return {ph, n * py.log_abs};
    }
    if (n == 0) {
        if (x == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), 0.0};
        Complex ph = Complex(1.0, 0.0);
        for (int i = 0; i < m; ++i) ph *= px.unit;
        return {ph, m * px.log_abs};
    }

    const int lmax = std::min(m, n);
    // Stack buffers: this runs inside the parallel matrix fill and must not
    // touch the allocator.
    std::array<Complex, kFockIndexMax + 1> ux, uy;
    ux[0] = Complex(1.0, 0.0);
    for (int i = 1; i <= m; ++i) ux[i] = ux[i - 1] * px.unit;
    uy[0] = Complex(1.0, 0.0);
    for (int i = 1; i <= n; ++i) uy[i] = uy[i - 1] * py.unit;

    const double lf_m = log_factorial(m);
    const double lf_n = log_factorial(n);
    ScaledSum acc;
    for (int l = 0; l <= lmax; ++l) {
        const int pm = m - l, pn = n - l;
        if (pm > 0 && std::isinf(px.log_abs)) continue;  // x == 0 kills x^{m-l}
        if (pn > 0 && std::isinf(py.log_abs)) continue;
        double lm = lf_m + lf_n - log_factorial(l) - log_factorial(pn) - log_factorial(pm);
        if (pm > 0) lm += pm * px.log_abs;
        if (pn > 0) lm += pn * py.log_abs;
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        acc.add(lm, sign * ux[pm] * uy[pn]);
    }
    return acc.result();
}

ScaledReal assoc_laguerre_neg_scaled(int n, int k, double u) {
    if (n < 0 || k < 0 || n + k > 2 * kFockIndexMax)
        throw EnvelopeError("assoc_laguerre_neg_scaled: index outside supported range");
    if (u < 0.0 || !std::isfinite(u))
        throw std::domain_error("assoc_laguerre_neg_scaled: u must be finite and >= 0");
    if (n == 0 || u == 0.0) return {1.0, 0.0};
    // L_n^k(-u) = sum_j C(n+k, n-j) u^j / j!   -- all positive.
    const double lu = std::log(u);
    double scale = 0.0, sum = 0.0;
    bool first = true;
    for (int j = 0; j <= n; ++j) {
        const double lt = log_binomial(n + k, n - j) + j * lu - log_factorial(j);
        if (first) {
            scale = lt;
            sum = 1.0;
            first = false;
        } else if (lt <= scale) {
            sum += std::exp(lt - scale);
        } else {
            sum = sum * std::exp(scale - lt) + 1.0;
            scale = lt;
        }
    }
    return {sum, scale};
}

Complex assoc_laguerre_series(int n, int k, Complex z) {
    if (n < 0 || k < 0 || n > kSpecialFnMaxOrder || k > kSpecialFnMaxOrder)
        throw EnvelopeError("assoc_laguerre_series: index outside supported range");
    Complex sum{0.0, 0.0};
    Complex zp{1.0, 0.0};
    for (int j = 0; j <= n; ++j) {
        const double c = std::exp(log_binomial(n + k, n - j) - log_factorial(j));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        sum += sign * c * zp;
        zp *= z;
    }
    return sum;
}

}

Complex hermite2(int m, int n, Complex x, Complex y) {
    check_order(m, "hermite2");
    check_order(n, "hermite2");
    const detail::ScaledComplex s = detail::hermite2_scaled(m, n, x, y);
    if (s.mantissa == Complex(0.0, 0.0)) return {0.0, 0.0};
    const double lg = s.log_abs();
    if (lg > 700.0) throw std::overflow_error("hermite2: value exceeds double range");
    return s.value();
}

}
