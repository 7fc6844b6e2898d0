#pragma once

#include "bakerotoc/matrix.hpp"
#include "bakerotoc/otoc.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace bakerotoc {

// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;
// Classical Lyapunov (and topological) exponent of the baker map.
inline const double lyapunov_exponent = std::log(2.0);

// Decomposition parameters entering the closed-form semiquantum sum.
struct SemiquantumParams {
    Eigen::Index dimension;  // N
    Eigen::Index odd_part;   // N0
    int max_time;            // T
    int t;
    Eigen::Index m;          // floor(N / 2^{t+1})

    static SemiquantumParams resolve(Eigen::Index n, int t) {
        const BakerConfig cfg = BakerConfig::from_dimension(n);
        return {n, cfg.odd_part, cfg.max_time, t,
                n >> (t + 1)};  // floor division
    }
};

// Exact closed form for the semiquantum commutator norm with the half-space
// projector J = N/2.  When 2^t | N the full reduced sum over odd multiples
// of 2^{t-1} is used, including the l = N/2 boundary term so that t = T is
// covered by the same expression (the term vanishes identically for t < T).
// For generic N the sum with M = floor(N / 2^{t+1}) is used instead.
inline double f_sq_exact(Eigen::Index n, int t) {
    const SemiquantumParams par = SemiquantumParams::resolve(n, t);
    if (t < 1)
        throw std::invalid_argument("f_sq_exact: t must be >= 1");
    const double nd = static_cast<double>(n);
    if (t <= par.max_time) {
        const double step = std::pow(2.0, t - 1);  // l = (2k+1) 2^{t-1}
        double sum = 0.0;
        for (double l = step; l <= nd / 2.0 - 1.0; l += 2.0 * step) {
            const double s = std::sin(M_PI * l / nd);
            sum += l / (s * s);  // sin^2(pi l / 2^t) = 1 at these l
        }
        const double boundary = (t == par.max_time) ? nd / 2.0 : 0.0;
        return std::pow(2.0, 2 * t - 2) / (nd * nd) * (2.0 * sum + boundary);
    }
    const auto m = static_cast<double>(par.m);
    if (par.m < 1)
        throw std::invalid_argument("f_sq_exact: floor(N/2^{t+1}) must be >= 1");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < par.m; ++k) {
        const double s = std::sin(M_PI * (2 * k + 1) / (4.0 * m));
        sum += (2 * k + 1) / (s * s);
    }
    return std::pow(2.0, t) / (16.0 * m * m) * sum;
}

// Logarithmic approximation f(t) ~ (2^t / 2 pi^2) ln(4 e^{gamma+1} N / (pi 2^t)),
// valid deep inside the validity window (M >> 1).
inline double f_sq_approx(Eigen::Index n, int t) {
    if (t < 1)
        throw std::invalid_argument("f_sq_approx: t must be >= 1");
    const Eigen::Index m = n >> (t + 1);
    if (m < 8)
        throw std::invalid_argument(
            "f_sq_approx: out of validity, requires floor(N/2^{t+1}) >= 8");
    const double pow2t = std::pow(2.0, t);
    return pow2t / (2.0 * M_PI * M_PI) *
           std::log(4.0 * std::exp(euler_gamma + 1.0) / M_PI *
                    static_cast<double>(n) / pow2t);
}

// Digamma via the recurrence psi(x) = psi(x+1) - 1/x followed by the
// asymptotic series in 1/x^2.
inline double digamma(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli coefficients B_2/2, B_4/4, ... over x^{2n}
    const double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + std::log(x) - 0.5 * inv - series;
}

// The finite sum (1/M^2) sum_k (2k+1)/sin^2(pi(2k+1)/4M) next to its
// digamma closed form (8/pi^2)[1 + ln(8/pi) + gamma + psi(M + 1/2)];
// they differ by O(1/M^2).
inline std::pair<double, double> sum_asymptotic_check(Eigen::Index m) {
    if (m < 1)
        throw std::invalid_argument("sum_asymptotic_check: M must be >= 1");
    const auto md = static_cast<double>(m);
    double exact = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        const double s = std::sin(M_PI * (2 * k + 1) / (4.0 * md));
        exact += (2 * k + 1) / (s * s);
    }
    exact /= md * md;
    const double closed =
        8.0 / (M_PI * M_PI) *
        (1.0 + std::log(8.0 / M_PI) + euler_gamma + digamma(md + 0.5));
    return {exact, closed};
}

// CUE ensemble average <f> = J^2 (N-J)^2 / (N (N^2 - 1)); tends to N/16 at
// the half-space projector.
inline double rmt_saturation(Eigen::Index n, Eigen::Index j) {
    if (n < 2)
        throw std::invalid_argument("rmt_saturation: N must be >= 2");
    if (j < 1 || j > n - 1)
        throw std::invalid_argument("rmt_saturation: J must be in [1, N-1]");
    const auto nd = static_cast<double>(n);
    const auto jd = static_cast<double>(j);
    return jd * jd * (nd - jd) * (nd - jd) / (nd * (nd * nd - 1.0));
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Haar-distributed unitary: QR of a complex Ginibre matrix with the
// diagonal of R rotated onto the positive axis.  Deterministic per seed.
inline CMatrix sample_cue(Eigen::Index n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("sample_cue: dimension must be positive");
    std::mt19937_64 rng(splitmix64(seed));
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix z(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < n; ++c) {
        const Complex d = r(c, c);
        const double mag = std::abs(d);
        q.col(c) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
    return q;
}

struct EnsembleEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::vector<double> samples;
};

// Monte Carlo estimate of <f> over CUE draws, with per-sample seeds mixed
// deterministically from the master seed and the sample index.
inline EnsembleEstimate cue_empirical_f(Eigen::Index n, Eigen::Index j,
                                        int n_samples, std::uint64_t seed) {
    if (n_samples < 2)
        throw std::invalid_argument("cue_empirical_f: need at least 2 samples");
    if (j < 1 || j > n)
        throw std::invalid_argument("cue_empirical_f: J must be in [1, N]");
    EnsembleEstimate est;
    est.samples.reserve(n_samples);
    const ProjectorRange range{0, j - 1};
    double sum = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const std::uint64_t sample_seed =
            splitmix64(seed ^ (0xA0761D6478BD642FULL * (i + 1)));
        const double f = f_commutator(sample_cue(n, sample_seed), range);
        est.samples.push_back(f);
        sum += f;
    }
    est.mean = sum / n_samples;
    double var = 0.0;
    for (double f : est.samples) var += (f - est.mean) * (f - est.mean);
    var /= (n_samples - 1);
    est.standard_error = std::sqrt(var / n_samples);
    return est;
}

}  // namespace bakerotoc
