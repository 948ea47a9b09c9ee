#pragma once

#include <vector>

namespace goldspec {

/// Dense symmetric matrix, row-major.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

/// Eigenvalues of a symmetric matrix, sorted non-increasing.
///
/// Cyclic Jacobi sweeps over the strict upper triangle in row-major order;
/// converges when the off-diagonal Frobenius norm drops below 1e-12 times
/// the Frobenius norm of the input (at most 100 sweeps). Deterministic:
/// fixed sweep order, no randomness. Throws ContractViolation for
/// non-symmetric input and SizeError beyond order 5000.
std::vector<double> eig_symmetric(SymMatrix m);

struct EigResult {
    std::vector<double> values;   // sorted non-increasing
    std::vector<double> vectors;  // column j = eigenvector of values[j], row-major n*n
};

/// Same as eig_symmetric but also accumulates the orthogonal eigenvector basis.
EigResult eig_symmetric_full(SymMatrix m);

}  // namespace goldspec
