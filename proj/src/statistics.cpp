#include "secst/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "secst/errors.hpp"
#include "secst/parallel.hpp"
#include "secst/special_functions.hpp"
#include "secst/state.hpp"

namespace secst {

double mean_photon(const SecstParams& params) {
    validate(params);
    const double u = -params.alpha_abs2();
    const double lm = laguerre(params.m, u);
    const double lm1 = laguerre(params.m + 1, u);
    const double mean = (1.0 + params.m) * lm1 / lm + params.n_bar_t - 1.0;
    return std::max(mean, 0.0);
}

double antinormal_second_moment(const SecstParams& params) {
    validate(params);
    const double u = -params.alpha_abs2();
    const int m = params.m;
    const double nb = params.n_bar_t;
    const double lm = laguerre(m, u);
    const double lm1 = laguerre(m + 1, u);
    const double lm2 = laguerre(m + 2, u);
    return 2.0 * nb * nb + (m + 1.0) / lm * (4.0 * nb * lm1 + (m + 2.0) * lm2);
}

double mandel_q(const SecstParams& params) {
    validate(params);
    const double u = -params.alpha_abs2();
    const int m = params.m;
    const double nb = params.n_bar_t;
    const double lm = laguerre(m, u);
    const double lm1 = laguerre(m + 1, u);
    const double lm2 = laguerre(m + 2, u);
    const double denom = (1.0 + m) * lm1 + (nb - 1.0) * lm;
    if (denom <= 0.0)
        throw VacuumError("mandel_q: undefined at the vacuum (alpha = 0, m = 0, n_bar_t = 0)");
    const double numer = nb * (nb - 1.0) * lm + (2.0 * nb - 1.0) * (m + 1.0) * lm1 +
                         (m + 1.0) * (m + 2.0) * lm2 - (m + 1.0) * (m + 1.0) * lm1 * lm1 / lm;
    return numer / denom;
}

PhotonNumberDistribution photon_number_distribution(const SecstParams& params, int n_max) {
    validate(params);
    if (n_max < 0 || n_max > kNMaxEnvelope)
        throw std::domain_error("photon_number_distribution: n_max outside [0, 256]");
    PhotonNumberDistribution dist;
    dist.p.assign(n_max + 1, 0.0);
    parallel_for(n_max + 1, [&](std::int64_t n) {
        dist.p[n] = fock_element(params, static_cast<int>(n), static_cast<int>(n)).real();
    });
    double sum = 0.0;
    for (double& v : dist.p) {
        if (v < 0.0) {
            if (v < -1e-12)
                throw std::runtime_error(
                    "photon_number_distribution: negative diagonal beyond tolerance");
            v = 0.0;
        }
        sum += v;
    }
    dist.sum = sum;
    dist.truncation_warning = sum < 1.0 - 1e-6;
    return dist;
}

double sub_poisson_threshold(double alpha_abs, int m, ThresholdInfo* info) {
    if (alpha_abs < 0.0) throw std::domain_error("sub_poisson_threshold: alpha_abs must be >= 0");
    if (m < 1)
        throw std::domain_error("sub_poisson_threshold: requires m >= 1 (no crossing for m = 0)");

    const auto f = [&](double nb) {
        return mandel_q(SecstParams(Complex(alpha_abs, 0.0), m, nb)) - 1.0;
    };

    // Probe the bracket densely, then bisect the first sign change.
    constexpr double lo0 = 1e-6, hi0 = 2.0;
    constexpr int probes = 256;
    double lo = 0.0, hi = 0.0;
    int changes = 0;
    double prev_x = lo0, prev_f = f(lo0);
    for (int i = 1; i <= probes; ++i) {
        const double x = lo0 + (hi0 - lo0) * i / probes;
        const double fx = f(x);
        if ((prev_f <= 0.0 && fx > 0.0) || (prev_f >= 0.0 && fx < 0.0)) {
            ++changes;
            if (changes == 1) {
                lo = prev_x;
                hi = x;
            }
        }
        prev_x = x;
        prev_f = fx;
    }
    if (info) {
        info->sign_changes = changes;
        info->multiple_roots = changes > 1;
    }
    if (changes == 0)
        throw NoCrossingError("sub_poisson_threshold: Q - 1 does not change sign on (0, 2]");

    double flo = f(lo);
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace detail {

double mandel_q_from_moments(const SecstParams& params) {
    const double mean = mean_photon(params);
    if (mean <= 0.0) throw VacuumError("mandel_q_from_moments: undefined at the vacuum");
    const double anti = antinormal_second_moment(params);
    const double n2 = anti - 3.0 * mean - 2.0;  // <n^2> from the antinormal moment
    return n2 / mean - mean;
}

}

}
