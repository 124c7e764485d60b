#ifndef SECST_PHASE_SPACE_HPP
#define SECST_PHASE_SPACE_HPP

#include <complex>
#include <memory>
#include <vector>

#include "secst/density_matrix.hpp"
#include "secst/parallel.hpp"
#include "secst/params.hpp"

namespace secst {

/// Point gamma = x + iy of the phase plane.
struct PhasePoint {
    double x = 0.0;
    double y = 0.0;

    std::complex<double> gamma() const { return {x, y}; }
};

/// Rectangular sampling of the phase plane.
struct PhaseGrid {
    static constexpr long kMaxCells = 4'000'000;

    double x_min = -4.0, x_max = 4.0;
    double y_min = -4.0, y_max = 4.0;
    int nx = 201, ny = 201;

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dy() const { return (y_max - y_min) / (ny - 1); }
    double x_at(int i) const { return x_min + i * dx(); }
    double y_at(int j) const { return y_min + j * dy(); }
};

/// Throws std::domain_error on a degenerate or oversized grid.
void validate(const PhaseGrid& grid);

/// Wigner function sampled over a grid. Point values follow the convention
/// in which the coherent-state peak is 1/pi; integral_estimate therefore
/// carries the compensating factor 2 in the phase-plane measure so that a
/// normalized state integrates to 1.
struct WignerSurface {
    PhaseGrid grid;
    std::vector<double> values;  // row-major, index ix * ny + iy
    double integral_estimate = 0.0;
    double min_value = 0.0;
    PhasePoint min_location;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * grid.ny + iy]; }
};

/// Wigner function of the state at one phase-space point. The Laguerre sum
/// is grouped so the value is manifestly real and stays finite for every
/// n_bar_t >= 0, including the zero-temperature limit.
double wigner(const SecstParams& params, PhasePoint p);

/// The alpha = 0 special form, kept in its literal shape for cross-checks.
/// At the removable singularity (2 n_bar_t + 1) n_bar_t = 1 it routes to the
/// general evaluator.
double wigner_special_alpha0(int m, double n_bar_t, PhasePoint p);

/// Evaluates wigner over the grid, tracks the minimum, and estimates the
/// normalization integral by the trapezoid rule.
WignerSurface wigner_surface(const SecstParams& params, const PhaseGrid& grid,
                             Exec exec = Exec::parallel);

/// Marginal value plus provenance: closed_form tells whether the analytic
/// expression was used (false = numeric integration fallback); discrepant is
/// set when the closed form has been found to disagree with the numeric
/// oracle and the returned value came from the oracle.
struct MarginalValue {
    double value = 0.0;
    bool closed_form = true;
    bool discrepant = false;
};

/// Position marginal: integral of the Wigner function over y at fixed x
/// (canonical measure, so the marginal integrates to 1 over x). Closed form
/// away from the band |2 n_bar_t - 1| <= 1e-4 and from n_bar_t = 0; numeric
/// fallback inside.
MarginalValue marginal_x(const SecstParams& params, double x);

/// Momentum marginal, mirror of marginal_x.
MarginalValue marginal_y(const SecstParams& params, double y);

/// Compares the closed-form marginals against numeric integration at a few
/// probe points; returns true when they agree within tol (absolute). The CLI
/// runs this once per invocation and falls back to the numeric path for all
/// points when it fails.
bool marginal_closed_form_consistent(const SecstParams& params, double tol = 1e-5);

namespace detail {

/// Width of the band around n_bar_t = 1/2 inside which the marginals use
/// numeric integration of the Wigner function.
inline constexpr double kMarginalSingularBand = 1e-4;

/// Fixed-node Gauss-Legendre integration of the Wigner function over the
/// conjugate variable; exposed so tests can exercise node-doubling
/// convergence. axis is 'x' (integrate over y) or 'y' (integrate over x).
double marginal_numeric_fixed(const SecstParams& params, char axis, double coord, int nodes);

/// Adaptive version: doubles nodes until successive estimates differ by at
/// most abs_tol.
double marginal_numeric(const SecstParams& params, char axis, double coord,
                        double abs_tol = 1e-8);

/// Closed-form marginal without the fallback routing. The grouped form is
/// regular for every n_bar_t >= 0; the public entry points keep the
/// documented routing anyway.
double marginal_closed_form(const SecstParams& params, char axis, double coord);

}

}

#endif
