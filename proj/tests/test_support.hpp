#ifndef SECST_TESTS_SUPPORT_HPP
#define SECST_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "secst/oracle.hpp"
#include "secst/params.hpp"

namespace secst_tests {

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    if (scale == 0.0) return 0.0;
    return std::abs(got - want) / scale;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    if (scale == 0.0) return 0.0;
    return std::abs(got - want) / scale;
}

/// Uniform |alpha| in [0, alpha_max] with uniform phase, m uniform in
/// [0, m_max], n_bar_t uniform in [nbar_min, nbar_max].
inline secst::SecstParams draw_params(std::mt19937_64& rng, int m_max, double alpha_max,
                                      double nbar_max, double nbar_min = 0.05) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double a = alpha_max * unit(rng);
    const double phi = 2.0 * M_PI * unit(rng);
    const int m = static_cast<int>(unit(rng) * (m_max + 1)) % (m_max + 1);
    const double nb = nbar_min + (nbar_max - nbar_min) * unit(rng);
    return secst::SecstParams(std::polar(a, phi), m, nb);
}

inline std::complex<double> draw_complex(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(radius * unit(rng), 2.0 * M_PI * unit(rng));
}

/// Quadrature settings tight enough to certify elements over a Fock window
/// of size n_max: the angular node count exceeds the integrand's harmonic
/// bandwidth (N + M + 2m), and the radial cutoff covers not just the thermal
/// weight but the r^{2N} growth of the Fock overlaps, whose product peaks at
/// r ~ sqrt(N lambda^2).
inline secst::QuadratureSpec tuned_quadrature_spec(const secst::SecstParams& p, int n_max) {
    secst::QuadratureSpec spec;
    spec.radial_nodes = 128;
    spec.angular_nodes = 2 * n_max + 4 * p.m + 16;
    const double lam2 = p.lambda_t_sq();
    const double weight_only = std::sqrt(p.n_bar_t * std::log(1e16));
    const double window_aware =
        std::sqrt(n_max * lam2) + 4.5 * std::sqrt(lam2) + std::abs(p.alpha) + 2.0;
    spec.radius_cutoff = std::max(weight_only, window_aware);
    return spec;
}

}

#endif
