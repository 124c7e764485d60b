#ifndef SECST_PARAMS_HPP
#define SECST_PARAMS_HPP

#include <cmath>
#include <complex>

namespace secst {

/// Parameters of one state: coherent amplitude alpha, number of photon
/// additions m, and thermal mean photon number n_bar_t.
struct SecstParams {
    static constexpr int kMaxAdditions = 16;
    static constexpr double kMaxAlphaAbs = 10.0;

    std::complex<double> alpha{0.0, 0.0};
    int m = 0;
    double n_bar_t = 0.0;

    SecstParams() = default;
    SecstParams(std::complex<double> alpha_, int m_, double n_bar_t_);

    double alpha_abs2() const { return std::norm(alpha); }

    /// lambda_t = sqrt(n_bar_t / (1 + n_bar_t)), the thermal contraction
    /// factor appearing throughout the closed forms.
    double lambda_t() const { return std::sqrt(n_bar_t / (1.0 + n_bar_t)); }

    /// lambda_t^2, cheaper and exact at n_bar_t = 0.
    double lambda_t_sq() const { return n_bar_t / (1.0 + n_bar_t); }
};

/// Throws std::domain_error if the parameters violate their envelopes
/// (n_bar_t >= 0 and finite, 0 <= m <= 16, |alpha| <= 10).
void validate(const SecstParams& p);

}

#endif
