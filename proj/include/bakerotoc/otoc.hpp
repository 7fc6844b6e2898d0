#pragma once

#include "bakerotoc/matrix.hpp"
#include "bakerotoc/quantum.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bakerotoc {

enum class EvolutionMode { quantum, semiquantum };

inline std::string to_string(EvolutionMode mode) {
    return mode == EvolutionMode::quantum ? "quantum" : "semiquantum";
}

// Two-point correlator f2(t) = Tr(P(t) P(0)) = || truncation of U^t ||_F^2.
inline double f2_of_truncation(const CMatrix& u_t, const ProjectorRange& range) {
    return frobenius_norm_sq(truncate(u_t, range));
}

// Four-point OTOC f4(t) = || Utrunc^dagger Utrunc ||_F^2 = sum mu_i^2.
inline double f4_of_truncation(const CMatrix& u_t, const ProjectorRange& range) {
    const CMatrix trunc = truncate(u_t, range);
    return frobenius_norm_sq(CMatrix(trunc.adjoint() * trunc));
}

inline double commutator_norm_from_mu(const std::vector<double>& mu) {
    double f = 0.0;
    for (double m : mu) f += m * (1.0 - m);
    return f;
}

// f(t) = sum_i mu_i (1 - mu_i) over the squared singular values of the
// truncated propagator; equals f2 - f4 and is bounded by J/4.
inline double f_commutator(const CMatrix& u_t, const ProjectorRange& range) {
    return commutator_norm_from_mu(singular_values_squared(truncate(u_t, range)));
}

// Independent route for f(t): the cross-block sum
// sum_{j in J, j' not in J} |<j|P(t)|j'>|^2 evaluated from the rows of U^t
// belonging to the projector window.  P(t) = U^{t dagger} P U^t, so the
// needed elements are (V^dagger V)_{j j'} with V the J x N row slice.
inline double f_cross_block(const CMatrix& u_t, const ProjectorRange& range) {
    range.validate(u_t.rows());
    const Eigen::Index n = u_t.rows();
    const Eigen::Index j_dim = range.size();
    const CMatrix v = u_t.block(range.j_min, 0, j_dim, n);
    const CMatrix p_t_rows = v.adjoint().middleRows(range.j_min, j_dim) * v;
    double f = 0.0;
    for (Eigen::Index col = 0; col < n; ++col) {
        if (col >= range.j_min && col <= range.j_max) continue;
        f += p_t_rows.col(col).squaredNorm();
    }
    return f;
}

struct OtocRecord {
    long t = 0;
    double f2 = 0.0;
    double f4 = 0.0;
    double f = 0.0;
    std::vector<double> mu;
};

struct OtocSeries {
    Eigen::Index dimension = 0;
    ProjectorRange range;
    EvolutionMode mode = EvolutionMode::quantum;
    std::vector<OtocRecord> records;
};

inline OtocRecord otoc_record_at(const CMatrix& u_t, const ProjectorRange& range,
                                 long t) {
    OtocRecord rec;
    rec.t = t;
    const CMatrix trunc = truncate(u_t, range);
    rec.mu = singular_values_squared(trunc);
    rec.f2 = frobenius_norm_sq(trunc);
    rec.f4 = 0.0;
    for (double m : rec.mu) rec.f4 += m * m;
    rec.f = rec.f2 - rec.f4;
    return rec;
}

// Series of f2, f4, f for t = 0..t_max.  Quantum mode accumulates B^t with
// one multiplication per step; semiquantum mode rebuilds B_t from the
// period-t block structure and is limited to the validity window t <= T.
inline OtocSeries otoc_series(Eigen::Index n, long t_max, const ProjectorRange& range,
                              EvolutionMode mode) {
    const BakerConfig cfg = BakerConfig::from_dimension(n);
    range.validate(n);
    if (t_max < 0)
        throw std::invalid_argument("otoc_series: t_max must be nonnegative");
    if (mode == EvolutionMode::semiquantum && t_max > cfg.max_time)
        throw std::invalid_argument(
            "otoc_series: semiquantum mode requires t_max <= T (2-adic valuation of N)");
    if (mode == EvolutionMode::quantum && t_max > 1000)
        throw std::invalid_argument("otoc_series: t_max must be <= 1000");

    OtocSeries series;
    series.dimension = n;
    series.range = range;
    series.mode = mode;
    series.records.reserve(t_max + 1);

    if (mode == EvolutionMode::quantum) {
        const CMatrix b = build_baker(n);
        CMatrix acc = CMatrix::Identity(n, n);
        for (long t = 0; t <= t_max; ++t) {
            series.records.push_back(otoc_record_at(acc, range, t));
            if (t < t_max) acc = b * acc;
        }
    } else {
        series.records.push_back(
            otoc_record_at(CMatrix::Identity(n, n), range, 0));
        for (long t = 1; t <= t_max; ++t)
            series.records.push_back(
                otoc_record_at(build_semiquantum(n, static_cast<int>(t)), range, t));
    }
    return series;
}

// General commutator correlator -1/2 Tr([A(t), A(0)]^2) for a Hermitian
// observable, with A(t) = U^{-t} A U^t accumulated one conjugation per step.
inline std::vector<double> f_general_observable(const CMatrix& u, const CMatrix& a,
                                                long t_max) {
    if (u.rows() != u.cols() || a.rows() != a.cols() || a.rows() != u.rows())
        throw std::invalid_argument("f_general_observable: dimension mismatch");
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("f_general_observable: observable must be Hermitian");
    if (t_max < 0)
        throw std::invalid_argument("f_general_observable: t_max must be nonnegative");
    std::vector<double> series;
    series.reserve(t_max + 1);
    CMatrix a_t = a;
    for (long t = 0; t <= t_max; ++t) {
        const CMatrix comm = a_t * a - a * a_t;
        series.push_back(-0.5 * (comm * comm).trace().real());
        if (t < t_max) a_t = u.adjoint() * a_t * u;
    }
    return series;
}

// Position-diagonal observable cos(2 pi q) with the half-integer grid
// q_n = (n + 1/2) / N.
inline CMatrix cosine_position_observable(Eigen::Index n) {
    CMatrix a = CMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        a(j, j) = std::cos(2.0 * M_PI * (j + 0.5) / static_cast<double>(n));
    return a;
}

inline CMatrix projector_observable(Eigen::Index n, const ProjectorRange& range) {
    range.validate(n);
    CMatrix p = CMatrix::Zero(n, n);
    for (Eigen::Index j = range.j_min; j <= range.j_max; ++j) p(j, j) = 1.0;
    return p;
}

}  // namespace bakerotoc
