#include "secst/information.hpp"

#include <cmath>
#include <stdexcept>

#include "secst/errors.hpp"
#include "secst/special_functions.hpp"
#include "secst/state.hpp"
#include "secst/statistics.hpp"

namespace secst {

double thermal_entropy(double n_bar) {
    if (!(n_bar >= 0.0) || !std::isfinite(n_bar))
        throw std::domain_error("thermal_entropy: n_bar must be finite and >= 0");
    if (n_bar == 0.0) return 0.0;
    return std::log1p(n_bar) + n_bar * (std::log1p(n_bar) - std::log(n_bar));
}

double actual_entropy(const SecstParams& params, int n_max) {
    const PhotonNumberDistribution dist = photon_number_distribution(params, n_max);
    double s = 0.0;
    for (const double p : dist.p)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

double max_entropy(const SecstParams& params) {
    const double mean = mean_photon(params);
    if (mean <= 0.0) throw VacuumError("max_entropy: undefined at the vacuum");
    return thermal_entropy(mean);
}

CapacityResult channel_capacity(const SecstParams& params, int n_max) {
    CapacityResult r;
    r.n_max_used = n_max;
    const PhotonNumberDistribution dist = photon_number_distribution(params, n_max);
    for (const double p : dist.p)
        if (p > 0.0) r.s_act -= p * std::log(p);
    r.truncation_warning = dist.truncation_warning;
    r.s_max = max_entropy(params);
    r.info = r.s_max - r.s_act;
    if (r.info < 0.0 && r.info > -1e-9) r.info = 0.0;  // truncation roundoff
    return r;
}

namespace detail {

double max_entropy_expanded(const SecstParams& params) {
    const double u = -params.alpha_abs2();
    const int m = params.m;
    const double nb = params.n_bar_t;
    const double lm = laguerre(m, u);
    const double lm1 = laguerre(m + 1, u);
    const double ratio = (1.0 + m) * lm1 / lm;
    const double denom = (1.0 + m) * lm1 + (nb - 1.0) * lm;
    if (denom <= 0.0) throw VacuumError("max_entropy_expanded: undefined at the vacuum");
    return std::log(ratio + nb) +
           (ratio + nb - 1.0) * std::log(((1.0 + m) * lm1 + nb * lm) / denom);
}

}

}
