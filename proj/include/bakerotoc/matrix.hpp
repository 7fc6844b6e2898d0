#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

namespace bakerotoc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Contiguous position-basis index window [j_min, j_max] defining the
// projector P = sum_{j_min <= j <= j_max} |j><j|.
struct ProjectorRange {
    Eigen::Index j_min = 0;
    Eigen::Index j_max = 0;

    Eigen::Index size() const { return j_max - j_min + 1; }

    void validate(Eigen::Index dim) const {
        if (j_min < 0 || j_max < j_min || j_max >= dim)
            throw std::invalid_argument("ProjectorRange: window out of bounds");
    }
};

// Discrete Fourier transform with half-integer shifts:
// G(m, k) = exp(-2 pi i (m + 1/2)(k + 1/2) / n) / sqrt(n).
// The shifts make G commute with the anti-diagonal flip.
inline CMatrix dft_shifted(Eigen::Index n) {
    if (n < 1)
        throw std::invalid_argument("dft_shifted: dimension must be positive");
    CMatrix g(n, n);
    const double w = 2.0 * M_PI / static_cast<double>(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index m = 0; m < n; ++m)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double phase = -w * (m + 0.5) * (k + 0.5);
            g(m, k) = scale * Complex(std::cos(phase), std::sin(phase));
        }
    return g;
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    return a * b;
}

// u^t by repeated multiplication.  t stays small in every experiment, so
// the linear error growth is acceptable and monitored by unitarity checks.
inline CMatrix matrix_power(const CMatrix& u, long t) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("matrix_power: matrix must be square");
    if (t < 0 || t > 10000)
        throw std::invalid_argument("matrix_power: exponent must be in [0, 10^4]");
    CMatrix acc = CMatrix::Identity(u.rows(), u.cols());
    for (long i = 0; i < t; ++i)
        acc = u * acc;
    return acc;
}

// J x J sub-block with row and column indices in [j_min, j_max].
inline CMatrix truncate(const CMatrix& u, const ProjectorRange& range) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("truncate: matrix must be square");
    range.validate(u.rows());
    return u.block(range.j_min, range.j_min, range.size(), range.size());
}

inline double frobenius_norm_sq(const CMatrix& m) { return m.squaredNorm(); }

// Squared singular values mu_i of m, descending, computed as the Hermitian
// eigenvalues of m^dagger m.
inline std::vector<double> singular_values_squared(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument("singular_values_squared: matrix must be square");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.adjoint() * m,
                                                  Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("singular_values_squared: eigensolver did not converge");
    std::vector<double> mu(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
    std::reverse(mu.begin(), mu.end());
    return mu;
}

// Eigenvalues of a general (non-normal) complex matrix.
inline std::vector<Complex> complex_eigenvalues(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument("complex_eigenvalues: matrix must be square");
    if (m.rows() > 4096)
        throw std::invalid_argument("complex_eigenvalues: dimension exceeds 4096");
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error(
            "complex_eigenvalues: QR iteration failed to converge within the "
            "iteration cap");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows()};
}

inline double max_abs_deviation_from_identity(const CMatrix& m) {
    const Eigen::Index n = m.rows();
    return (m - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

inline double unitarity_defect(const CMatrix& u) {
    return max_abs_deviation_from_identity(u.adjoint() * u);
}

}  // namespace bakerotoc
