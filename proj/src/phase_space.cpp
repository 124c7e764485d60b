#include "secst/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "secst/errors.hpp"
#include "secst/quadrature.hpp"
#include "secst/special_functions.hpp"
#include "secst/state.hpp"

namespace secst {

namespace {

constexpr double kPi = std::numbers::pi;

double binom_over_factorial(int m, int k) {
    // C(m,k)/k! for the small orders used here; exact in double.
    return std::exp(detail::log_binomial(m, k) - log_factorial(k));
}

}

void validate(const PhaseGrid& grid) {
    if (!(grid.x_min < grid.x_max) || !(grid.y_min < grid.y_max))
        throw std::domain_error("PhaseGrid: min must be strictly below max on both axes");
    if (grid.nx < 2 || grid.ny < 2) throw std::domain_error("PhaseGrid: need at least 2x2 points");
    if (static_cast<long>(grid.nx) * grid.ny > PhaseGrid::kMaxCells)
        throw std::domain_error("PhaseGrid: more than 4e6 cells");
}

double wigner(const SecstParams& params, PhasePoint p) {
    validate(params);
    const double nb = params.n_bar_t;
    const double s = 2.0 * nb + 1.0;
    const Complex gamma = p.gamma();
    const double gauss = std::exp(-2.0 * std::norm(params.alpha - gamma) / s);

    // The Laguerre sum is grouped in the two regular combinations
    //   lambda^2 * A1^2      = (2 n_bar_t - 1) / s
    //   lambda^2 * |A2|^2    = |(2 n_bar_t - 1) alpha + 2 gamma|^2 / s^2
    // so nothing blows up at small n_bar_t and the value is manifestly real.
    const double t1 = (2.0 * nb - 1.0) / s;
    const double t2 = std::norm((2.0 * nb - 1.0) * params.alpha + 2.0 * gamma) / (s * s);
    double poly = 0.0;
    for (int k = 0; k <= params.m; ++k)
        poly += binom_over_factorial(params.m, k) * std::pow(t2, k) * std::pow(t1, params.m - k);

    return poly * gauss / (kPi * s * laguerre(params.m, -params.alpha_abs2()));
}

double wigner_special_alpha0(int m, double n_bar_t, PhasePoint p) {
    if (m < 0 || m > SecstParams::kMaxAdditions)
        throw std::domain_error("wigner_special_alpha0: m outside [0, 16]");
    if (!(n_bar_t > 0.0))
        throw std::domain_error("wigner_special_alpha0: requires n_bar_t > 0");
    const double s = 2.0 * n_bar_t + 1.0;
    const double g = s * n_bar_t - 1.0;
    if (std::abs(g) < 1e-8)  // removable 0 * L_m(inf); the grouped form handles it
        return wigner(SecstParams(Complex(0.0, 0.0), m, n_bar_t), p);
    const double g2 = std::norm(p.gamma());
    const double xi = 4.0 * g2 * (n_bar_t + 1.0) / (s * g);
    return std::pow(g, m) / (kPi * std::pow(s, m + 1) * std::pow(n_bar_t + 1.0, m)) *
           std::exp(-2.0 * g2 / s) * laguerre(m, -xi);
}

WignerSurface wigner_surface(const SecstParams& params, const PhaseGrid& grid, Exec exec) {
    validate(params);
    validate(grid);
    WignerSurface surf;
    surf.grid = grid;
    surf.values.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);

    parallel_for(
        grid.nx,
        [&](std::int64_t ix) {
            const double x = grid.x_at(static_cast<int>(ix));
            double* row = surf.values.data() + static_cast<std::size_t>(ix) * grid.ny;
            for (int iy = 0; iy < grid.ny; ++iy)
                row[iy] = wigner(params, {x, grid.y_at(iy)});
        },
        exec);

    // Ordered reductions keep the result identical across thread counts.
    double integral = 0.0;
    double mn = surf.values[0];
    int mn_ix = 0, mn_iy = 0;
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double wx = (ix == 0 || ix == grid.nx - 1) ? 0.5 : 1.0;
        for (int iy = 0; iy < grid.ny; ++iy) {
            const double wy = (iy == 0 || iy == grid.ny - 1) ? 0.5 : 1.0;
            const double v = surf.at(ix, iy);
            integral += wx * wy * v;
            if (v < mn) {
                mn = v;
                mn_ix = ix;
                mn_iy = iy;
            }
        }
    }
    // Factor 2: canonical phase-plane measure, under which a normalized
    // state integrates to 1 while the coherent peak stays at 1/pi.
    surf.integral_estimate = 2.0 * integral * grid.dx() * grid.dy();
    surf.min_value = mn;
    surf.min_location = {grid.x_at(mn_ix), grid.y_at(mn_iy)};
    return surf;
}

namespace detail {

double marginal_closed_form(const SecstParams& params, char axis, double coord) {
    const double nb = params.n_bar_t;
    const double s = 2.0 * nb + 1.0;
    const int m = params.m;
    const double q = params.alpha.real();
    const double p = params.alpha.imag();

    Complex e;
    double center;
    if (axis == 'x') {
        e = ((2.0 * nb - 1.0) * params.alpha + Complex(2.0 * coord, 2.0 * p)) /
            std::sqrt(2.0 * s);
        center = q;
    } else {
        e = Complex(0.0, 1.0) *
            ((2.0 * nb - 1.0) * params.alpha + Complex(2.0 * q, 2.0 * coord)) /
            std::sqrt(2.0 * s);
        center = p;
    }

    // The nominal prefactor ((lambda^2 A1^2)/(2 n_bar_t - 1))^m collapses to
    // s^-m, so there is no actual singularity at n_bar_t = 1/2.
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double c = std::exp((2 * k - m) * std::log(2.0) - log_factorial(k) -
                                  2.0 * log_factorial(m - k)) *
                         std::pow(nb, k);
        sum += c * std::norm(hermite(m - k, e));
    }
    const double pref = 2.0 * normalization(params) *
                        std::exp(2.0 * log_factorial(m) - m * std::log(s)) /
                        std::sqrt(2.0 * kPi * s);
    const double diff = center - coord;
    return pref * std::exp(-2.0 * diff * diff / s) * sum;
}

double marginal_numeric_fixed(const SecstParams& params, char axis, double coord, int nodes) {
    const double s = 2.0 * params.n_bar_t + 1.0;
    const double center = (axis == 'x') ? params.alpha.imag() : params.alpha.real();
    const double half_width = std::sqrt(s) * (5.0 + 0.6 * params.m) + 2.0;

    std::vector<double> gl_x, gl_w;
    detail::gauss_legendre(nodes, gl_x, gl_w);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double t = center + half_width * gl_x[i];
        const PhasePoint pt =
            (axis == 'x') ? PhasePoint{coord, t} : PhasePoint{t, coord};
        sum += gl_w[i] * wigner(params, pt);
    }
    return 2.0 * half_width * sum;  // canonical measure, as in the surface integral
}

double marginal_numeric(const SecstParams& params, char axis, double coord, double abs_tol) {
    int nodes = 64;
    double prev = marginal_numeric_fixed(params, axis, coord, nodes);
    for (int it = 0; it < 7; ++it) {
        nodes *= 2;
        const double cur = marginal_numeric_fixed(params, axis, coord, nodes);
        if (std::abs(cur - prev) <= abs_tol) return cur;
        prev = cur;
    }
    return prev;
}

}

namespace {

MarginalValue marginal_impl(const SecstParams& params, char axis, double coord) {
    validate(params);
    if (!std::isfinite(coord)) throw std::domain_error("marginal: coordinate must be finite");
    MarginalValue r;
    const bool singular_band =
        std::abs(2.0 * params.n_bar_t - 1.0) <= detail::kMarginalSingularBand;
    if (params.n_bar_t == 0.0 || singular_band) {
        r.value = detail::marginal_numeric(params, axis, coord);
        r.closed_form = false;
        return r;
    }
    r.value = detail::marginal_closed_form(params, axis, coord);
    r.closed_form = true;
    if (r.value < 0.0 && r.value > -1e-10) r.value = 0.0;
    return r;
}

}

MarginalValue marginal_x(const SecstParams& params, double x) {
    return marginal_impl(params, 'x', x);
}

MarginalValue marginal_y(const SecstParams& params, double y) {
    return marginal_impl(params, 'y', y);
}

bool marginal_closed_form_consistent(const SecstParams& params, double tol) {
    validate(params);
    if (params.n_bar_t == 0.0) return true;  // closed form not used there
    const double s = 2.0 * params.n_bar_t + 1.0;
    for (const char axis : {'x', 'y'}) {
        const double center =
            (axis == 'x') ? params.alpha.real() : params.alpha.imag();
        for (int i = -2; i <= 2; ++i) {
            const double coord = center + 0.8 * i * std::sqrt(s);
            const double cf = detail::marginal_closed_form(params, axis, coord);
            const double nm = detail::marginal_numeric(params, axis, coord);
            if (std::abs(cf - nm) > tol) return false;
        }
    }
    return true;
}

}
