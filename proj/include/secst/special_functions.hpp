#ifndef SECST_SPECIAL_FUNCTIONS_HPP
#define SECST_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace secst {

using Complex = std::complex<double>;

/// Largest polynomial order accepted by the public special-function calls.
inline constexpr int kSpecialFnMaxOrder = 64;

/// ln(n!), exact to double rounding for small n, log-gamma beyond.
double log_factorial(int n);

/// Laguerre polynomial L_m(x) by the three-term recurrence.
double laguerre(int m, double x);

/// Associated Laguerre polynomial L_n^k(x); reduces to laguerre() at k = 0.
double assoc_laguerre(int n, int k, double x);

/// Physicists' Hermite polynomial H_n(z) for complex argument.
Complex hermite(int n, Complex z);

/// Two-variable Hermite polynomial
///   H_{m,n}(x, y) = sum_{l=0}^{min(m,n)} m! n! (-1)^l x^{m-l} y^{n-l}
///                   / (l! (n-l)! (m-l)!).
/// Coefficients are combined in log space. Throws std::overflow_error when
/// the value itself exceeds double range.
Complex hermite2(int m, int n, Complex x, Complex y);

namespace detail {

/// Fock indices supported by the scaled internal evaluators; the density
/// matrix builder needs two-variable Hermite values at indices this large.
inline constexpr int kFockIndexMax = 256;

/// A complex number stored as mantissa * exp(log_scale) so that quantities
/// far outside double range can flow through intermediate algebra.
struct ScaledComplex {
    Complex mantissa{0.0, 0.0};
    double log_scale = 0.0;

    Complex value() const {
        if (mantissa == Complex(0.0, 0.0)) return {0.0, 0.0};
        return mantissa * std::exp(log_scale);
    }
    double log_abs() const {
        const double a = std::abs(mantissa);
        if (a == 0.0) return -std::numeric_limits<double>::infinity();
        return log_scale + std::log(a);
    }
};

struct ScaledReal {
    double mantissa = 0.0;
    double log_scale = 0.0;

    double value() const { return mantissa == 0.0 ? 0.0 : mantissa * std::exp(log_scale); }
};

/// Accumulates sum_i exp(log_i) * phase_i with on-line rescaling to the
/// largest magnitude seen, so no term overflows or is flushed to zero
/// prematurely.
class ScaledSum {
public:
    void add(double log_mag, Complex phase) {
        if (std::isinf(log_mag) && log_mag < 0.0) return;
        if (empty_) {
            scale_ = log_mag;
            sum_ = phase;
            empty_ = false;
            return;
        }
        if (log_mag <= scale_) {
            sum_ += phase * std::exp(log_mag - scale_);
        } else {
            sum_ = sum_ * std::exp(scale_ - log_mag) + phase;
            scale_ = log_mag;
        }
    }

    ScaledComplex result() const {
        if (empty_) return {Complex(0.0, 0.0), 0.0};
        return {sum_, scale_};
    }

private:
    bool empty_ = true;
    double scale_ = 0.0;
    Complex sum_{0.0, 0.0};
};

double log_binomial(int n, int k);

/// Two-variable Hermite polynomial in scaled form; supports indices up to
/// kFockIndexMax and arbitrary complex arguments without overflow.
ScaledComplex hermite2_scaled(int m, int n, Complex x, Complex y);

/// L_n^k(-u) for u >= 0 in scaled form. Every series term is positive, so
/// the evaluation is cancellation-free.
ScaledReal assoc_laguerre_neg_scaled(int n, int k, double u);

/// Associated Laguerre polynomial at complex argument by the direct series.
Complex assoc_laguerre_series(int n, int k, Complex z);

}

}

#endif
