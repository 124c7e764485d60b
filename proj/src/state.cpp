#include "secst/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "secst/errors.hpp"
#include "secst/special_functions.hpp"

namespace secst {

namespace {

using detail::ScaledComplex;
using detail::ScaledSum;

void check_fock_index(int n, const char* fn) {
    if (n < 0 || n > detail::kFockIndexMax)
        throw std::domain_error(std::string(fn) + ": Fock index " + std::to_string(n) +
                                " outside [0, " + std::to_string(detail::kFockIndexMax) + "]");
}

// <N| a'^m |alpha> for the zero-temperature state: sqrt(N!)/(N-m)! alpha^{N-m}
// e^{-|alpha|^2/2} for N >= m, else 0.
Complex pacs_amplitude(const SecstParams& p, int n) {
    if (n < p.m) return {0.0, 0.0};
    const int k = n - p.m;
    const double a = std::abs(p.alpha);
    if (a == 0.0 && k > 0) return {0.0, 0.0};
    double lm = 0.5 * log_factorial(n) - log_factorial(k) - 0.5 * p.alpha_abs2();
    Complex ph{1.0, 0.0};
    if (k > 0) {
        lm += k * std::log(a);
        const Complex u = p.alpha / a;
        for (int i = 0; i < k; ++i) ph *= u;
    }
    return ph * std::exp(lm);
}

Complex fock_element_zero_temperature(const SecstParams& p, int n, int m_idx) {
    return normalization(p) * pacs_amplitude(p, n) * std::conj(pacs_amplitude(p, m_idx));
}

// General thermal case. The closed form carries a mixed derivative of order
// m in each of two auxiliary variables acting on exp(lambda^2 u u') times a
// two-variable Hermite polynomial; the Leibniz rule turns it into a finite
// sum over (j, k, i):
//   j derivatives land on the Hermite factor through its second argument,
//   k derivatives land on it through its first argument,
//   the rest act on the exponential, whose mixed derivative of orders
//   (a, b) is exp(..) * sum_i C(a,i) b!/(b-i)! lam^{2(a+b-i)} u^{b-i} u'^{a-i}.
// Index derivatives of the Hermite polynomial lower its orders:
//   d/dx H_{M,N} = M H_{M-1,N},  d/dy H_{M,N} = N H_{M,N-1}.
// Everything is accumulated as log-magnitude plus unit phase so that large
// Fock indices and small n_bar_t cannot overflow intermediates.
Complex fock_element_thermal(const SecstParams& p, int n, int m_idx) {
    const int N = n, M = m_idx, m = p.m;
    const double nb = p.n_bar_t;
    const double log_nb = std::log(nb);
    const double log_nb1 = std::log1p(nb);
    const double log_lam2 = log_nb - log_nb1;  // ln lambda^2
    const double lam2 = p.lambda_t_sq();
    const double a2 = p.alpha_abs2();
    const double aa = std::sqrt(a2);
    const Complex ua = (aa == 0.0) ? Complex(1.0, 0.0) : p.alpha / aa;
    const double log_aa =
        (aa == 0.0) ? -std::numeric_limits<double>::infinity() : std::log(aa);

    const Complex x = std::conj(p.alpha) / (1.0 + nb);
    const Complex y = -p.alpha / nb;

    const int jmax = std::min(m, N);
    const int kmax = std::min(m, M);

    // Hermite factors shared by all i at fixed (j, k). Stack buffers keep
    // the parallel matrix fill allocation-free.
    constexpr int kMaxM = SecstParams::kMaxAdditions;
    std::array<ScaledComplex, (kMaxM + 1) * (kMaxM + 1)> h;
    for (int j = 0; j <= jmax; ++j)
        for (int k = 0; k <= kmax; ++k)
            h[j * (kmax + 1) + k] = detail::hermite2_scaled(M - k, N - j, x, y);

    ScaledSum acc;
    std::array<Complex, 2 * kMaxM + 1> ua_pow;  // ua^(t - m) stored at index t
    ua_pow[m] = Complex(1.0, 0.0);
    for (int t = 1; t <= m; ++t) {
        ua_pow[m + t] = ua_pow[m + t - 1] * ua;
        ua_pow[m - t] = ua_pow[m - t + 1] * std::conj(ua);
    }

    for (int j = 0; j <= jmax; ++j) {
        const double base_j = detail::log_binomial(m, j) + log_factorial(N) -
                              log_factorial(N - j) - j * log_nb;
        const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
        for (int k = 0; k <= kmax; ++k) {
            const ScaledComplex& hf = h[j * (kmax + 1) + k];
            if (hf.mantissa == Complex(0.0, 0.0)) continue;
            const double ha = std::abs(hf.mantissa);
            const Complex h_unit = hf.mantissa / ha;
            const double base_jk = base_j + detail::log_binomial(m, k) + log_factorial(M) -
                                   log_factorial(M - k) - k * log_nb1 + hf.log_scale +
                                   std::log(ha);
            const int a = m - j, b = m - k;
            const int imax = std::min(a, b);
            for (int i = 0; i <= imax; ++i) {
                const int alpha_pow = 2 * m - j - k - 2 * i;  // total power of |alpha|
                if (alpha_pow > 0 && aa == 0.0) continue;
                double lm = base_jk + detail::log_binomial(a, i) + log_factorial(b) -
                            log_factorial(b - i) + (2 * m - j - k - i) * log_lam2;
                if (alpha_pow > 0) lm += alpha_pow * log_aa;
                acc.add(lm, sign_j * ua_pow[m + j - k] * h_unit);
            }
        }
    }

    const double u = a2 == 0.0 ? 1.0 : laguerre(m, -a2);
    const double log_pref = -log_factorial(m) - std::log(u)  // ln C_{alpha,m}
                            - a2 + lam2 * a2                 // Gaussian * exponential factor
                            - log_nb1 + N * log_lam2 - 0.5 * (log_factorial(M) + log_factorial(N));
    const double sign_pref = (N % 2 == 0) ? 1.0 : -1.0;

    const ScaledComplex sum = acc.result();
    if (sum.mantissa == Complex(0.0, 0.0)) return {0.0, 0.0};
    const double total = sum.log_scale + log_pref;
    if (total < -745.0) return {0.0, 0.0};  // underflows to zero
    return sign_pref * sum.mantissa * std::exp(total);
}

}

SecstParams::SecstParams(std::complex<double> alpha_, int m_, double n_bar_t_)
    : alpha(alpha_), m(m_), n_bar_t(n_bar_t_) {
    secst::validate(*this);
}

void validate(const SecstParams& p) {
    if (!std::isfinite(p.alpha.real()) || !std::isfinite(p.alpha.imag()))
        throw std::domain_error("SecstParams: alpha must be finite");
    if (std::abs(p.alpha) > SecstParams::kMaxAlphaAbs)
        throw std::domain_error("SecstParams: |alpha| exceeds supported range");
    if (p.m < 0 || p.m > SecstParams::kMaxAdditions)
        throw std::domain_error("SecstParams: m outside [0, 16]");
    if (!(p.n_bar_t >= 0.0) || !std::isfinite(p.n_bar_t))
        throw std::domain_error("SecstParams: n_bar_t must be finite and >= 0");
}

double normalization(const SecstParams& params) {
    // L_m(-|alpha|^2) >= 1, so this is always positive and finite.
    return std::exp(-log_factorial(params.m)) / laguerre(params.m, -params.alpha_abs2());
}

Complex fock_element(const SecstParams& params, int n, int m_idx) {
    check_fock_index(n, "fock_element");
    check_fock_index(m_idx, "fock_element");
    if (params.n_bar_t == 0.0) return fock_element_zero_temperature(params, n, m_idx);
    return fock_element_thermal(params, n, m_idx);
}

Complex glauber_lachs_element(std::complex<double> alpha, double n_bar_t, int n, int m_idx) {
    check_fock_index(n, "glauber_lachs_element");
    check_fock_index(m_idx, "glauber_lachs_element");
    if (m_idx < n)
        throw std::domain_error("glauber_lachs_element: requires column index >= row index");
    if (!(n_bar_t > 0.0))
        throw std::domain_error("glauber_lachs_element: requires n_bar_t > 0");
    const double a2 = std::norm(alpha);
    const double aa = std::sqrt(a2);
    const int d = m_idx - n;
    if (aa == 0.0 && d > 0) return {0.0, 0.0};

    const double u = a2 / (n_bar_t * (n_bar_t + 1.0));
    const detail::ScaledReal lag = detail::assoc_laguerre_neg_scaled(n, d, u);
    double lm = 0.5 * (log_factorial(n) - log_factorial(m_idx)) + n * std::log(n_bar_t) -
                (m_idx + 1) * std::log1p(n_bar_t) - a2 / (n_bar_t + 1.0) + lag.log_scale +
                std::log(lag.mantissa);
    Complex ph{1.0, 0.0};
    if (d > 0) {
        lm += d * std::log(aa);
        const Complex uc = std::conj(alpha) / aa;
        for (int i = 0; i < d; ++i) ph *= uc;
    }
    if (lm < -745.0) return {0.0, 0.0};
    return ph * std::exp(lm);
}

double number_thermal_pn(int m, double n_bar_t, int n) {
    check_fock_index(n, "number_thermal_pn");
    if (m < 0 || m > SecstParams::kMaxAdditions)
        throw std::domain_error("number_thermal_pn: m outside [0, 16]");
    if (n_bar_t < 0.0) throw std::domain_error("number_thermal_pn: n_bar_t must be >= 0");
    if (n_bar_t == 0.0) return n == m ? 1.0 : 0.0;

    const double lr = std::log(n_bar_t) - std::log1p(n_bar_t);  // ln(nb/(nb+1))
    const double lprod = std::log(n_bar_t) + std::log1p(n_bar_t);
    const double base = log_factorial(m) + log_factorial(n) - std::log1p(n_bar_t);
    double scale = 0.0, sum = 0.0;
    bool first = true;
    for (int k = std::max(0, m - n); k <= m; ++k) {
        const double lt = base - log_factorial(k) + (k + n) * lr + (k - m) * lprod -
                          log_factorial(k + n - m) - 2.0 * log_factorial(m - k);
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
    if (first) return 0.0;
    return sum * std::exp(scale);
}

DensityMatrix build_density_matrix(const SecstParams& params, int n_max,
                                   const BuildOptions& options) {
    validate(params);
    if (n_max < 0 || n_max > kNMaxEnvelope)
        throw std::domain_error("build_density_matrix: n_max outside [0, 256]");

    DensityMatrix rho;
    rho.dim = n_max + 1;
    rho.params = params;
    rho.entries.assign(static_cast<std::size_t>(rho.dim) * rho.dim, Complex(0.0, 0.0));

    const int dim = rho.dim;
    parallel_for(
        static_cast<std::int64_t>(dim) * dim,
        [&](std::int64_t idx) {
            const int n = static_cast<int>(idx / dim);
            const int m = static_cast<int>(idx % dim);
            rho.entries[idx] = fock_element(params, n, m);
        },
        options.exec);

    // Both triangles were computed independently; the pre-averaging mismatch
    // is a numerical health probe, then conjugate-pair averaging enforces
    // hermiticity exactly.
    double defect = 0.0;
    for (int n = 0; n < dim; ++n) {
        rho.at(n, n) = Complex(rho.at(n, n).real(), 0.0);
        for (int m = n + 1; m < dim; ++m) {
            const Complex a = rho.at(n, m);
            const Complex b = rho.at(m, n);
            defect = std::max(defect, std::abs(a - std::conj(b)));
            const Complex avg = 0.5 * (a + std::conj(b));
            rho.at(n, m) = avg;
            rho.at(m, n) = std::conj(avg);
        }
    }
    rho.hermiticity_defect = defect;
    rho.trace_deficit = 1.0 - rho.trace();
    rho.truncation_warning = rho.trace_deficit > options.trace_tol;
    return rho;
}

int suggest_n_max(const SecstParams& params, double tail_tol) {
    validate(params);
    if (!(tail_tol > 0.0) || !(tail_tol < 1.0))
        throw std::domain_error("suggest_n_max: tail_tol must lie in (0, 1)");

    std::vector<double> diag;
    int cap = 16;
    while (true) {
        while (static_cast<int>(diag.size()) <= cap) {
            const int n = static_cast<int>(diag.size());
            diag.push_back(fock_element(params, n, n).real());
        }
        // First index whose cumulative sum crosses the target.
        double partial = 0.0;
        for (int n = 0; n <= cap; ++n) {
            partial += diag[n];
            if (partial > 1.0 - tail_tol) return n;
        }
        if (cap >= kNMaxEnvelope)
            throw EnvelopeError("suggest_n_max: required truncation exceeds 256");
        cap = std::min(kNMaxEnvelope, 2 * cap);
    }
}

int default_n_max(const SecstParams& params) {
    return std::max(70, suggest_n_max(params, 1e-8));
}

}
