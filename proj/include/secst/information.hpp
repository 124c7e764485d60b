#ifndef SECST_INFORMATION_HPP
#define SECST_INFORMATION_HPP

#include "secst/params.hpp"

namespace secst {

/// Entropies in nats and the maximum transmissible information of the beam.
struct CapacityResult {
    double s_act = 0.0;
    double s_max = 0.0;
    double info = 0.0;
    int n_max_used = 0;
    bool truncation_warning = false;
};

/// Entropy of a thermal state with mean photon number n_bar:
/// ln(1 + n_bar) + n_bar ln((n_bar + 1)/n_bar); 0 at n_bar = 0.
double thermal_entropy(double n_bar);

/// Diagonal (photon-number) entropy -sum sigma_N ln sigma_N over the
/// truncated distribution, with 0 ln 0 := 0.
double actual_entropy(const SecstParams& params, int n_max);

/// Maximum entropy: the thermal entropy at the beam's mean photon number.
/// Throws VacuumError at the vacuum.
double max_entropy(const SecstParams& params);

/// info = max_entropy - actual_entropy, clipped at tiny negatives coming
/// from truncation.
CapacityResult channel_capacity(const SecstParams& params, int n_max);

namespace detail {

/// The maximum entropy written out in the Laguerre ratios rather than
/// composed through thermal_entropy(mean_photon); the two must agree to
/// rounding and tests compare them.
double max_entropy_expanded(const SecstParams& params);

}

}

#endif
