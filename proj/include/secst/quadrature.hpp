#ifndef SECST_QUADRATURE_HPP
#define SECST_QUADRATURE_HPP

#include <vector>

namespace secst::detail {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre three-term recurrence. Accurate to ~1e-15 for the node counts
/// used here.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}

#endif
