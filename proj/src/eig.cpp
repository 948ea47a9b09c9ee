#include "goldspec/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "goldspec/common.hpp"
#include "goldspec/errors.hpp"

namespace goldspec {

namespace {

constexpr double kConvergenceFactor = 1e-12;  // of ||A||_F
constexpr int kMaxSweeps = 100;

void check_input(const SymMatrix& m) {
    if (m.n < 1) throw ParameterError("eigensolver: matrix order must be >= 1");
    if (m.n > kMaxEigOrder)
        throw SizeError("eigensolver: order " + std::to_string(m.n) + " exceeds dense cap " +
                        std::to_string(kMaxEigOrder));
    if (m.a.size() != static_cast<size_t>(m.n) * m.n)
        throw ContractViolation("eigensolver: storage size does not match order");
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
                throw ContractViolation("eigensolver: matrix not symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
}

double off_diagonal_norm(const SymMatrix& m) {
    double s = 0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const SymMatrix& m) {
    double s = 0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

// One-sided cyclic Jacobi; diagonalizes m in place, optionally accumulating
// the rotation product in v (row-major, columns become eigenvectors).
void jacobi(SymMatrix& m, std::vector<double>* v) {
    const int n = m.n;
    if (v) {
        v->assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*v)[static_cast<size_t>(i) * n + i] = 1.0;
    }
    const double norm = frobenius_norm(m);
    if (norm == 0.0) return;
    const double threshold = kConvergenceFactor * norm;
    const double skip = threshold / n;  // per-element cutoff keeps off-norm below threshold

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(m) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (std::abs(apq) <= skip) continue;
                const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = m.at(k, p);
                    const double akq = m.at(k, q);
                    m.at(k, p) = m.at(p, k) = c * akp - s * akq;
                    m.at(k, q) = m.at(q, k) = s * akp + c * akq;
                }
                m.at(p, p) -= t * apq;
                m.at(q, q) += t * apq;
                m.at(p, q) = m.at(q, p) = 0.0;
                if (v) {
                    for (int k = 0; k < n; ++k) {
                        double& vkp = (*v)[static_cast<size_t>(k) * n + p];
                        double& vkq = (*v)[static_cast<size_t>(k) * n + q];
                        const double a = vkp, b = vkq;
                        vkp = c * a - s * b;
                        vkq = s * a + c * b;
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<double> eig_symmetric(SymMatrix m) {
    check_input(m);
    jacobi(m, nullptr);
    std::vector<double> values(m.n);
    for (int i = 0; i < m.n; ++i) values[i] = m.at(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

EigResult eig_symmetric_full(SymMatrix m) {
    check_input(m);
    const int n = m.n;
    std::vector<double> basis;
    jacobi(m, &basis);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return m.at(i, i) > m.at(j, j); });

    EigResult out;
    out.values.resize(n);
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = m.at(order[j], order[j]);
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<size_t>(i) * n + j] = basis[static_cast<size_t>(i) * n + order[j]];
    }
    return out;
}

}  // namespace goldspec
