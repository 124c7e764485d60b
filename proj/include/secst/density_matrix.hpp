#ifndef SECST_DENSITY_MATRIX_HPP
#define SECST_DENSITY_MATRIX_HPP

#include <complex>
#include <vector>

#include "secst/params.hpp"

namespace secst {

/// Hermitian density matrix in the truncated Fock basis, indices 0..n_max.
/// Row-major storage; entries[n][m] == conj(entries[m][n]) holds exactly by
/// construction.
struct DensityMatrix {
    int dim = 0;  // n_max + 1
    std::vector<std::complex<double>> entries;
    SecstParams params;
    double trace_deficit = 0.0;       // 1 - sum of diagonal
    double hermiticity_defect = 0.0;  // max |e(n,m) - conj(e(m,n))| before symmetrization
    bool truncation_warning = false;
    bool convergence_warning = false;

    int n_max() const { return dim - 1; }

    std::complex<double>& at(int n, int m) { return entries[static_cast<std::size_t>(n) * dim + m]; }
    const std::complex<double>& at(int n, int m) const {
        return entries[static_cast<std::size_t>(n) * dim + m];
    }

    double trace() const {
        double t = 0.0;
        for (int n = 0; n < dim; ++n) t += at(n, n).real();
        return t;
    }
};

}

#endif
