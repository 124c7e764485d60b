#ifndef SECST_ORACLE_HPP
#define SECST_ORACLE_HPP

#include <complex>
#include <vector>

#include "secst/density_matrix.hpp"
#include "secst/parallel.hpp"
#include "secst/params.hpp"
#include "secst/phase_space.hpp"

namespace secst {

/// Node counts for the brute-force 2-D quadrature over the thermal
/// displacement weight. radius_cutoff <= 0 selects the radius where the
/// Gaussian weight falls below 1e-16.
struct QuadratureSpec {
    int radial_nodes = 80;
    int angular_nodes = 128;
    double radius_cutoff = 0.0;
    bool check_convergence = false;  // re-run with doubled angular nodes and compare
    Exec exec = Exec::parallel;
};

/// <N| D(z) a'^m |alpha>, the overlap of a Fock state with the displaced
/// photon-added coherent state, including the displacement phase
/// D(z)|alpha> = exp((z alpha* - z* alpha)/2) |z + alpha>.
std::complex<double> displaced_pacs_overlap(std::complex<double> alpha, int m,
                                            std::complex<double> z, int n);

/// Reference density matrix by direct quadrature of the thermal displacement
/// integral: polar grid, Gauss-Legendre radially, trapezoid angularly (the
/// angular integrand is periodic, so the trapezoid rule is spectrally
/// accurate). Node reduction runs in a fixed order for reproducibility.
DensityMatrix rho_numeric(const SecstParams& params, int n_max, const QuadratureSpec& spec = {});

/// Wigner function from a built matrix via the displaced-parity sum,
/// normalized so a coherent state peaks at 1/pi. tail_bound, when non-null,
/// receives the bound on the neglected parity tail.
double wigner_numeric(const DensityMatrix& rho, PhasePoint p, double* tail_bound = nullptr);

struct NumericMoments {
    double mean = 0.0;
    double q = 0.0;
    bool truncation_warning = false;
};

/// Mean photon number and Mandel Q from the diagonal of a built matrix.
NumericMoments moments_numeric(const DensityMatrix& rho);

struct NumericEntropy {
    double diagonal = 0.0;
    double von_neumann = 0.0;
    bool truncation_warning = false;
};

/// Diagonal entropy and the eigenvalue-based von Neumann entropy. The
/// diagonal entropy majorizes the von Neumann entropy for every state.
NumericEntropy entropy_numeric(const DensityMatrix& rho);

/// Eigenvalues of the Hermitian matrix, ascending.
std::vector<double> eigenvalues(const DensityMatrix& rho);

}

#endif
