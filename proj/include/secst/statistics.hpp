#ifndef SECST_STATISTICS_HPP
#define SECST_STATISTICS_HPP

#include <vector>

#include "secst/params.hpp"

namespace secst {

/// One sample of the Mandel Q parameter over the (n_bar_t, |alpha|) plane.
struct QPoint {
    double n_bar_t = 0.0;
    double alpha_abs = 0.0;
    int m = 0;
    double q = 0.0;

    bool poissonian_boundary() const { return q == 1.0; }
};

/// Mean photon number <a'a> = (1+m) L_{m+1}/L_m + n_bar_t - 1, with the
/// Laguerre polynomials evaluated at -|alpha|^2. Always >= 0.
double mean_photon(const SecstParams& params);

/// Antinormally ordered second moment
///   <a^2 a'^2> = 2 n_bar_t^2 + (m+1)/L_m [4 n_bar_t L_{m+1} + (m+2) L_{m+2}].
double antinormal_second_moment(const SecstParams& params);

/// Mandel Q parameter from the closed form in the Laguerre ratios. Throws
/// VacuumError at the excluded point alpha = 0, m = 0, n_bar_t = 0.
double mandel_q(const SecstParams& params);

struct PhotonNumberDistribution {
    std::vector<double> p;  // sigma_N for N = 0..n_max
    double sum = 0.0;
    bool truncation_warning = false;  // sum < 1 - 1e-6
};

/// Diagonal of the density matrix, clipped to [0, inf) at the -1e-12 level.
PhotonNumberDistribution photon_number_distribution(const SecstParams& params, int n_max);

struct ThresholdInfo {
    bool multiple_roots = false;
    int sign_changes = 0;
};

/// Smallest n_bar_t in (0, 2] where Q crosses 1, located by bracketing and
/// bisection to 1e-6 absolute. Requires m >= 1; throws NoCrossingError when
/// Q - 1 does not change sign on the bracket.
double sub_poisson_threshold(double alpha_abs, int m, ThresholdInfo* info = nullptr);

namespace detail {

/// Q recombined from the mean and the antinormal second moment using the
/// commutator identities
///   <a a'>   = <a'a> + 1
///   <n^2>    = <a^2 a'^2> - 3 <a'a> - 2   (from a^2 a'^2 = n^2 + 3n + 2).
/// Kept distinct from mandel_q so the two routes can be compared.
double mandel_q_from_moments(const SecstParams& params);

}

}

#endif
