#pragma once

#include "bakerotoc/classical.hpp"
#include "bakerotoc/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bakerotoc {

// Decomposition N = N0 * 2^T with N0 odd.  T bounds the validity window of
// the semiquantum propagator; h = 1/N is the effective Planck constant.
struct BakerConfig {
    Eigen::Index dimension = 0;  // N
    Eigen::Index odd_part = 0;   // N0
    int max_time = 0;            // T, the 2-adic valuation of N

    static BakerConfig from_dimension(Eigen::Index n) {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("BakerConfig: dimension must be even and >= 2");
        BakerConfig cfg;
        cfg.dimension = n;
        cfg.odd_part = n;
        while (cfg.odd_part % 2 == 0) {
            cfg.odd_part /= 2;
            ++cfg.max_time;
        }
        return cfg;
    }

    double ehrenfest_time() const { return std::log2(static_cast<double>(dimension)); }
};

// B = G_N^{-1} diag(G_{N/2}, G_{N/2}) in the position basis.  G is unitary,
// so the inverse is the conjugate transpose.
inline CMatrix build_baker(Eigen::Index n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("build_baker: dimension must be even and >= 2");
    const CMatrix g_half = dft_shifted(n / 2);
    CMatrix mixed = CMatrix::Zero(n, n);
    mixed.topLeftCorner(n / 2, n / 2) = g_half;
    mixed.bottomRightCorner(n / 2, n / 2) = g_half;
    return dft_shifted(n).adjoint() * mixed;
}

// The permutation nu -> nu_bar underlying the block structure of the
// mixed-representation factor I_t: ones at (nu, nu_bar).
inline std::vector<std::uint64_t> build_swap_structure(int t) {
    if (t < 1 || t > 20)
        throw std::invalid_argument("build_swap_structure: t must be in [1, 20]");
    const std::uint64_t count = std::uint64_t{1} << t;
    std::vector<std::uint64_t> perm(count);
    for (std::uint64_t nu = 0; nu < count; ++nu)
        perm[nu] = bit_reverse(nu, t);
    return perm;
}

// Semiquantum propagator B_t = G_N^{-1} (I_t (x) G_{N/2^t}): the t-fold
// iterated classical map quantized in one go.  Block row nu of the mixed
// factor holds G_{N/2^t} in block column nu_bar.  Defined only while
// 2^t divides N, i.e. for 1 <= t <= T.
inline CMatrix build_semiquantum(Eigen::Index n, int t) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("build_semiquantum: dimension must be even and >= 2");
    if (t < 1 || t > 30)
        throw std::invalid_argument("build_semiquantum: t must be in [1, 30]");
    const Eigen::Index blocks = Eigen::Index{1} << t;
    if (n % blocks != 0)
        throw std::invalid_argument(
            "build_semiquantum: 2^t must divide N (t exceeds the validity window)");
    const Eigen::Index block_dim = n / blocks;
    const CMatrix g_block = dft_shifted(block_dim);
    CMatrix mixed = CMatrix::Zero(n, n);
    for (Eigen::Index nu = 0; nu < blocks; ++nu) {
        const auto nu_bar =
            static_cast<Eigen::Index>(bit_reverse(static_cast<std::uint64_t>(nu), t));
        mixed.block(nu * block_dim, nu_bar * block_dim, block_dim, block_dim) = g_block;
    }
    return dft_shifted(n).adjoint() * mixed;
}

// Closed-form position-basis matrix element <k|B_t|n>, used as an
// independent cross-check of build_semiquantum.  The column index n picks
// the unique block nu_bar it lies in; nu is its bit reversal.  The
// geometric sum over the momenta of that block is kept explicit.
inline Complex semiquantum_position_element(Eigen::Index n_dim, int t,
                                            Eigen::Index k, Eigen::Index n) {
    if (n_dim < 2 || n_dim % 2 != 0)
        throw std::invalid_argument("semiquantum_position_element: dimension must be even");
    const Eigen::Index blocks = Eigen::Index{1} << t;
    if (t < 1 || n_dim % blocks != 0)
        throw std::invalid_argument(
            "semiquantum_position_element: 2^t must divide N");
    if (k < 0 || k >= n_dim || n < 0 || n >= n_dim)
        throw std::invalid_argument("semiquantum_position_element: index out of range");

    const Eigen::Index block_dim = n_dim / blocks;
    const Eigen::Index nu_bar = n / block_dim;  // Theta_{n nu_bar} support
    const auto nu = static_cast<Eigen::Index>(
        bit_reverse(static_cast<std::uint64_t>(nu_bar), t));

    const double inv_n = 1.0 / static_cast<double>(n_dim);
    const double pow2t = static_cast<double>(blocks);
    Complex sum = 0.0;
    const double arg = (k + 0.5) - pow2t * (n + 0.5);
    for (Eigen::Index m = 0; m < block_dim; ++m) {
        const double phase = 2.0 * M_PI * inv_n * (m + 0.5) * arg;
        sum += Complex(std::cos(phase), std::sin(phase));
    }
    const double front_phase =
        M_PI * static_cast<double>(nu_bar) +
        2.0 * M_PI * static_cast<double>(nu) / pow2t * (k + 0.5);
    const Complex prefactor =
        std::sqrt(pow2t) * inv_n *
        Complex(std::cos(front_phase), std::sin(front_phase));
    return prefactor * sum;
}

}  // namespace bakerotoc
