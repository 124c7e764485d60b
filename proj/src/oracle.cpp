#include "secst/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "secst/errors.hpp"
#include "secst/quadrature.hpp"
#include "secst/special_functions.hpp"
#include "secst/state.hpp"

namespace secst {

namespace {

constexpr double kPi = std::numbers::pi;

// The oracle certifies closed-form elements down to the 1e-12 scale at 1e-6
// relative accuracy. Matrix elements that small emerge from ~6 orders of
// angular cancellation between node terms, so the overlap vectors and the
// node reduction both run in extended precision; plain double here leaves a
// correlated rounding residue of a few 1e-18 absolute.
using LongComplex = std::complex<long double>;

// Coherent amplitudes <n|w> = e^{-|w|^2/2} w^n / sqrt(n!), built iteratively;
// every entry is bounded by 1 in magnitude.
template <class T>
void coherent_amplitudes(std::complex<T> w, int n_max, std::vector<std::complex<T>>& out) {
    out.assign(n_max + 1, std::complex<T>(0, 0));
    out[0] = std::exp(static_cast<T>(-0.5) * (w * std::conj(w)).real());
    for (int n = 1; n <= n_max; ++n) out[n] = out[n - 1] * w / std::sqrt(static_cast<T>(n));
}

// Fills overlap[n] = <n| D(z) a'^m |alpha> for n = 0..n_max.
void overlap_vector(LongComplex alpha, int m, LongComplex z, int n_max,
                    std::vector<LongComplex>& coh, std::vector<LongComplex>& out) {
    const LongComplex w = z + alpha;
    coherent_amplitudes(w, n_max, coh);
    const LongComplex phase = std::exp((z * std::conj(alpha) - std::conj(z) * alpha) / 2.0L);
    out.assign(n_max + 1, LongComplex(0.0L, 0.0L));
    // (a' - z*)^m expanded binomially against the coherent amplitudes.
    for (int k = 0; k <= std::min(m, n_max); ++k) {
        const long double cmk = std::exp(detail::log_binomial(m, k));
        LongComplex zf(1.0L, 0.0L);
        for (int i = 0; i < m - k; ++i) zf *= -std::conj(z);
        for (int n = k; n <= n_max; ++n) {
            // sqrt(n!/(n-k)!)
            long double ff = 1.0L;
            for (int t = 0; t < k; ++t) ff *= static_cast<long double>(n - t);
            out[n] += cmk * zf * std::sqrt(ff) * coh[n - k];
        }
    }
    for (auto& v : out) v *= phase;
}

struct PolarGrid {
    std::vector<double> radius;
    std::vector<double> weight;  // full node weight including the thermal density
    int angular = 0;
};

PolarGrid make_polar_grid(double n_bar_t, const QuadratureSpec& spec, int angular_nodes) {
    if (spec.radial_nodes < 8 || angular_nodes < 8)
        throw std::domain_error("rho_numeric: node counts must be at least 8");
    PolarGrid g;
    g.angular = angular_nodes;
    double cutoff = spec.radius_cutoff;
    if (cutoff <= 0.0) cutoff = std::sqrt(-n_bar_t * std::log(1e-16));
    std::vector<double> x, w;
    detail::gauss_legendre(spec.radial_nodes, x, w);
    g.radius.resize(spec.radial_nodes);
    g.weight.resize(spec.radial_nodes);
    for (int i = 0; i < spec.radial_nodes; ++i) {
        const double r = 0.5 * cutoff * (x[i] + 1.0);
        const double jac = 0.5 * cutoff * w[i] * r;  // r dr
        // (1/pi) * P(r) * (2 pi / K): angular factor folded in per node later
        g.radius[i] = r;
        g.weight[i] = jac * std::exp(-r * r / n_bar_t) / n_bar_t * (2.0 / angular_nodes);
    }
    return g;
}

DensityMatrix rho_numeric_impl(const SecstParams& params, int n_max, const QuadratureSpec& spec,
                               int angular_nodes) {
    DensityMatrix rho;
    rho.dim = n_max + 1;
    rho.params = params;
    rho.entries.assign(static_cast<std::size_t>(rho.dim) * rho.dim, Complex(0.0, 0.0));

    const double c_norm = normalization(params);
    const int dim = rho.dim;

    if (params.n_bar_t == 0.0) {
        // The thermal weight degenerates to a point mass at z = 0.
        std::vector<LongComplex> coh, v;
        overlap_vector(LongComplex(params.alpha), params.m, LongComplex(0.0L, 0.0L), n_max, coh,
                       v);
        const long double cn = c_norm;
        for (int n = 0; n < dim; ++n) {
            rho.at(n, n) = Complex(static_cast<double>(cn * std::norm(v[n])), 0.0);
            for (int m = n + 1; m < dim; ++m) {
                const LongComplex e = cn * (v[n] * std::conj(v[m]));
                rho.at(n, m) =
                    Complex(static_cast<double>(e.real()), static_cast<double>(e.imag()));
                rho.at(m, n) = std::conj(rho.at(n, m));
            }
        }
        rho.trace_deficit = 1.0 - rho.trace();
        rho.truncation_warning = rho.trace_deficit > 1e-6;
        return rho;
    }

    const PolarGrid grid = make_polar_grid(params.n_bar_t, spec, angular_nodes);
    const int nodes = spec.radial_nodes * grid.angular;
    if (static_cast<long long>(nodes) * (n_max + 1) > 40'000'000)
        throw std::domain_error("rho_numeric: quadrature spec too large for in-memory overlaps");

    // Overlap vectors per quadrature node, each independent of the others.
    std::vector<std::vector<LongComplex>> overlaps(nodes);
    std::vector<long double> node_weight(nodes);
    parallel_for(
        nodes,
        [&](std::int64_t idx) {
            const int i = static_cast<int>(idx) / grid.angular;
            const int j = static_cast<int>(idx) % grid.angular;
            const long double theta = 2.0L * kPi * j / grid.angular;
            const LongComplex z =
                static_cast<long double>(grid.radius[i]) *
                LongComplex(std::cos(theta), std::sin(theta));
            std::vector<LongComplex> coh;
            overlap_vector(LongComplex(params.alpha), params.m, z, n_max, coh, overlaps[idx]);
            node_weight[idx] = grid.weight[i];
        },
        spec.exec);

    // Upper triangle; each element accumulates over nodes in a fixed order,
    // so results are identical for any thread count.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(dim) * (dim + 1) / 2);
    for (int n = 0; n < dim; ++n)
        for (int m = n; m < dim; ++m) pairs.emplace_back(n, m);
    parallel_for(
        static_cast<std::int64_t>(pairs.size()),
        [&](std::int64_t t) {
            const auto [n, m] = pairs[static_cast<std::size_t>(t)];
            long double re = 0.0L, im = 0.0L;
            for (int idx = 0; idx < nodes; ++idx) {
                const LongComplex& vn = overlaps[idx][n];
                const LongComplex& vm = overlaps[idx][m];
                const long double w = node_weight[idx];
                re += w * (vn.real() * vm.real() + vn.imag() * vm.imag());
                im += w * (vn.imag() * vm.real() - vn.real() * vm.imag());
            }
            rho.at(n, m) = Complex(static_cast<double>(c_norm * re),
                                   static_cast<double>(c_norm * im));
        },
        spec.exec);

    // Real weights times outer products make the matrix Hermitian; mirror the
    // lower triangle so it holds exactly.
    for (int n = 0; n < dim; ++n) {
        rho.at(n, n) = Complex(rho.at(n, n).real(), 0.0);
        for (int m = n + 1; m < dim; ++m) rho.at(m, n) = std::conj(rho.at(n, m));
    }

    rho.trace_deficit = 1.0 - rho.trace();
    rho.truncation_warning = rho.trace_deficit > 1e-6;
    return rho;
}

}

Complex displaced_pacs_overlap(std::complex<double> alpha, int m, std::complex<double> z, int n) {
    if (n < 0 || n > detail::kFockIndexMax)
        throw std::domain_error("displaced_pacs_overlap: Fock index outside envelope");
    if (m < 0 || m > SecstParams::kMaxAdditions)
        throw std::domain_error("displaced_pacs_overlap: m outside [0, 16]");
    std::vector<LongComplex> coh, v;
    overlap_vector(LongComplex(alpha), m, LongComplex(z), n, coh, v);
    return {static_cast<double>(v[n].real()), static_cast<double>(v[n].imag())};
}

DensityMatrix rho_numeric(const SecstParams& params, int n_max, const QuadratureSpec& spec) {
    validate(params);
    if (n_max < 0 || n_max > kNMaxEnvelope)
        throw std::domain_error("rho_numeric: n_max outside [0, 256]");
    DensityMatrix rho = rho_numeric_impl(params, n_max, spec, spec.angular_nodes);
    if (spec.check_convergence && params.n_bar_t > 0.0) {
        const DensityMatrix fine = rho_numeric_impl(params, n_max, spec, 2 * spec.angular_nodes);
        double delta = 0.0;
        for (std::size_t i = 0; i < rho.entries.size(); ++i)
            delta = std::max(delta, std::abs(rho.entries[i] - fine.entries[i]));
        rho.convergence_warning = delta > 1e-8;
    }
    return rho;
}

double wigner_numeric(const DensityMatrix& rho, PhasePoint p, double* tail_bound) {
    const int dim = rho.dim;
    if (dim <= 0) throw std::domain_error("wigner_numeric: empty matrix");
    const Complex gamma = p.gamma();
    const double gr = std::abs(gamma);

    // Parity sum over the displaced basis: (1/pi) sum_n (-1)^n <n|D' rho D|n>.
    // Columns of <N|D(gamma)|n> are built by the stable two-term recurrence
    //   D_{N,n+1} = (sqrt(N) D_{N-1,n} - gamma* D_{N,n}) / sqrt(n+1)
    // seeded with the coherent column D_{N,0} = <N|gamma>; every entry stays
    // bounded by 1.
    const double support = std::sqrt(static_cast<double>(dim)) + gr;
    const int k_min = static_cast<int>(support * support + 8.0 * support + 16.0);
    const int k_cap = 8192;

    std::vector<Complex> col, next;
    coherent_amplitudes(gamma, dim - 1, col);
    next.assign(dim, Complex(0.0, 0.0));
    std::vector<Complex> work(dim);

    double sum = 0.0;
    double sign = 1.0;
    int quiet = 0;
    int n = 0;
    double tail = 0.0;
    while (true) {
        // t_n = col' rho col, real for Hermitian rho.
        for (int r = 0; r < dim; ++r) {
            Complex acc(0.0, 0.0);
            const Complex* row = rho.entries.data() + static_cast<std::size_t>(r) * dim;
            for (int c = 0; c < dim; ++c) acc += row[c] * col[c];
            work[r] = acc;
        }
        Complex t(0.0, 0.0);
        for (int r = 0; r < dim; ++r) t += std::conj(col[r]) * work[r];
        sum += sign * t.real();

        double col_norm = 0.0;
        for (int r = 0; r < dim; ++r) col_norm += std::norm(col[r]);
        if (n >= k_min) {
            if (col_norm < 1e-14)
                ++quiet;
            else
                quiet = 0;
            if (quiet >= 8) {
                tail = col_norm;
                break;
            }
        }
        if (n >= k_cap) {
            tail = col_norm;
            break;
        }

        const double inv = 1.0 / std::sqrt(static_cast<double>(n + 1));
        next[0] = -std::conj(gamma) * col[0] * inv;
        for (int r = 1; r < dim; ++r)
            next[r] = (std::sqrt(static_cast<double>(r)) * col[r - 1] -
                       std::conj(gamma) * col[r]) *
                      inv;
        std::swap(col, next);
        sign = -sign;
        ++n;
    }
    if (tail_bound) *tail_bound = tail;
    return sum / kPi;
}

NumericMoments moments_numeric(const DensityMatrix& rho) {
    NumericMoments r;
    r.truncation_warning = rho.trace_deficit > 1e-6;
    double mean = 0.0, second = 0.0;
    for (int n = 0; n < rho.dim; ++n) {
        const double p = rho.at(n, n).real();
        mean += n * p;
        second += static_cast<double>(n) * n * p;
    }
    if (mean <= 0.0) throw VacuumError("moments_numeric: Q undefined at the vacuum");
    r.mean = mean;
    r.q = second / mean - mean;
    return r;
}

NumericEntropy entropy_numeric(const DensityMatrix& rho) {
    NumericEntropy r;
    r.truncation_warning = rho.trace_deficit > 1e-6;
    for (int n = 0; n < rho.dim; ++n) {
        const double p = rho.at(n, n).real();
        if (p > 0.0) r.diagonal -= p * std::log(p);
    }
    for (const double lam : eigenvalues(rho)) {
        if (lam < -1e-9)
            throw std::runtime_error("entropy_numeric: eigenvalue below -1e-9, matrix unphysical");
        if (lam > 0.0) r.von_neumann -= lam * std::log(lam);
    }
    return r;
}

std::vector<double> eigenvalues(const DensityMatrix& rho) {
    Eigen::MatrixXcd a(rho.dim, rho.dim);
    for (int n = 0; n < rho.dim; ++n)
        for (int m = 0; m < rho.dim; ++m) a(n, m) = rho.at(n, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: eigen-decomposition failed");
    std::vector<double> out(rho.dim);
    for (int i = 0; i < rho.dim; ++i) out[i] = solver.eigenvalues()[i];
    return out;
}

}
