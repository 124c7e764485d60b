// Times the OpenMP kernels against their serial reference paths and checks
// that both produce identical bits.

#include <chrono>
#include <cstdio>
#include <string>

#include "secst/oracle.hpp"
#include "secst/parallel.hpp"
#include "secst/phase_space.hpp"
#include "secst/special_functions.hpp"
#include "secst/state.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using secst::Complex;
using secst::Exec;
using secst::SecstParams;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms %7.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "bit-identical" : "MISMATCH");
}

}

int main() {
    std::printf("threads: %d\n", secst::max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        const SecstParams p(Complex(1.0, 0.5), 2, 0.8);
        secst::BuildOptions so, po;
        so.exec = Exec::serial;
        po.exec = Exec::parallel;
        secst::DensityMatrix a, b;
        const double ts = time_best_of(2, [&] { a = secst::build_density_matrix(p, 128, so); });
        const double tp = time_best_of(2, [&] { b = secst::build_density_matrix(p, 128, po); });
        report("build_density_matrix(128)", ts, tp, a.entries == b.entries);
    }
    {
        const SecstParams p(Complex(0.7, -0.4), 2, 0.9);
        secst::QuadratureSpec ss, ps;
        ss.radial_nodes = ps.radial_nodes = 128;
        ss.angular_nodes = ps.angular_nodes = 160;
        ss.exec = Exec::serial;
        ps.exec = Exec::parallel;
        secst::DensityMatrix a, b;
        const double ts = time_best_of(2, [&] { a = secst::rho_numeric(p, 48, ss); });
        const double tp = time_best_of(2, [&] { b = secst::rho_numeric(p, 48, ps); });
        report("rho_numeric(48, 128x160)", ts, tp, a.entries == b.entries);
    }
    {
        const SecstParams p(Complex(0.2, 0.2), 3, 0.3);
        secst::PhaseGrid grid;
        grid.x_min = grid.y_min = -6.0;
        grid.x_max = grid.y_max = 6.0;
        grid.nx = grid.ny = 301;
        secst::WignerSurface a, b;
        const double ts =
            time_best_of(2, [&] { a = secst::wigner_surface(p, grid, Exec::serial); });
        const double tp =
            time_best_of(2, [&] { b = secst::wigner_surface(p, grid, Exec::parallel); });
        report("wigner_surface(301x301)", ts, tp, a.values == b.values);
    }
    return 0;
}
