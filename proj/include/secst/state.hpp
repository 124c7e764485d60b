#ifndef SECST_STATE_HPP
#define SECST_STATE_HPP

#include <complex>

#include "secst/density_matrix.hpp"
#include "secst/parallel.hpp"
#include "secst/params.hpp"

namespace secst {

/// Largest Fock truncation accepted by the matrix builder.
inline constexpr int kNMaxEnvelope = 256;

/// Normalization constant 1 / (m! L_m(-|alpha|^2)); strictly positive.
double normalization(const SecstParams& params);

/// Fock-basis matrix element <N|rho|M> of the noisy photon-added state.
/// The mixed 2m-th derivative in the closed form is expanded as a finite
/// Leibniz sum; at n_bar_t = 0 the pure photon-added projector is used.
std::complex<double> fock_element(const SecstParams& params, int n, int m_idx);

/// Glauber-Lachs matrix element for the m = 0 (no photon addition) state.
/// Requires m_idx >= n and n_bar_t > 0; callers conjugate for the lower
/// triangle.
std::complex<double> glauber_lachs_element(std::complex<double> alpha, double n_bar_t, int n,
                                           int m_idx);

/// Diagonal photon-number probability P_N of the alpha = 0 state (photon-added
/// thermal field). Off-diagonal elements vanish for alpha = 0.
double number_thermal_pn(int m, double n_bar_t, int n);

struct BuildOptions {
    double trace_tol = 1e-6;  // deficit above this sets truncation_warning
    Exec exec = Exec::parallel;
};

/// Fills the (n_max+1)^2 matrix with fock_element, computing both triangles
/// independently, then symmetrizes by conjugate-pair averaging. The largest
/// pre-averaging mismatch is recorded as hermiticity_defect.
DensityMatrix build_density_matrix(const SecstParams& params, int n_max,
                                   const BuildOptions& options = {});

/// Smallest n_max whose cumulative diagonal exceeds 1 - tail_tol, located by
/// a doubling search over the diagonal sequence. Throws EnvelopeError if no
/// truncation within kNMaxEnvelope suffices.
int suggest_n_max(const SecstParams& params, double tail_tol);

/// Default truncation: max(70, suggest_n_max(params, 1e-8)).
int default_n_max(const SecstParams& params);

}

#endif
