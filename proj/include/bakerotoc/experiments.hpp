#pragma once

#include "bakerotoc/analytics.hpp"
#include "bakerotoc/classical.hpp"
#include "bakerotoc/matrix.hpp"
#include "bakerotoc/otoc.hpp"
#include "bakerotoc/quantum.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace bakerotoc {

inline constexpr const char* artifact_version = "baker-otoc 0.1.0";

// Deterministic CSV number formatting: 15 significant digits, '.' separator.
inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct ExperimentConfig {
    std::string command;
    Eigen::Index n = 256;
    long t_max = 10;
    Eigen::Index j_min = 0;
    Eigen::Index j_max = -1;  // -1 means default N/2 - 1
    EvolutionMode mode = EvolutionMode::quantum;
    std::uint64_t seed = 0;
    int n_samples = 100;
    bool normalize = false;
    std::string output_path;

    ProjectorRange range() const { return {j_min, j_max}; }

    // Fail fast before any heavy computation starts.
    void validate() {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("config: N must be even and >= 2");
        if (n > 4096)
            throw std::invalid_argument(
                "config: N > 4096 refused (dense N x N complex storage)");
        if (j_max < 0) j_max = n / 2 - 1;
        range().validate(n);
        if (t_max < 0)
            throw std::invalid_argument("config: t_max must be nonnegative");
        if (command == "otoc" && mode == EvolutionMode::semiquantum) {
            const BakerConfig cfg = BakerConfig::from_dimension(n);
            if (t_max > cfg.max_time)
                throw std::invalid_argument(
                    "config: semiquantum mode requires t_max <= 2-adic valuation of N");
        }
        if (command == "cue-baseline" && n_samples < 2)
            throw std::invalid_argument("config: need at least 2 samples");
    }

    std::string echo() const {
        std::ostringstream os;
        os << "command=" << command << " n=" << n << " tmax=" << t_max
           << " jmin=" << j_min << " jmax=" << j_max << " mode=" << to_string(mode)
           << " seed=" << seed << " samples=" << n_samples
           << " normalize=" << (normalize ? 1 : 0);
        return os.str();
    }
};

inline void write_provenance(std::ostream& out, const ExperimentConfig& cfg) {
    out << "# " << artifact_version << " | " << cfg.echo() << "\n";
}

// t, f2, f4, f plus the closed-form reference columns.  The semiquantum
// closed forms apply to the half-space projector only and stay empty for
// other windows or out-of-validity times.
inline void run_otoc(const ExperimentConfig& cfg, std::ostream& out) {
    const ProjectorRange range = cfg.range();
    const bool half_space = (cfg.j_min == 0 && range.size() == cfg.n / 2);
    const double scale = cfg.normalize ? 1.0 / static_cast<double>(cfg.n) : 1.0;

    std::string rmt_col;
    if (range.size() >= 1 && range.size() <= cfg.n - 1)
        rmt_col = csv_number(rmt_saturation(cfg.n, range.size()) * scale);

    const OtocSeries series = otoc_series(cfg.n, cfg.t_max, range, cfg.mode);

    write_provenance(out, cfg);
    out << "t,f2,f4,f,f_sq_exact,f_sq_approx,rmt_saturation\n";
    for (const OtocRecord& rec : series.records) {
        std::string exact_col, approx_col;
        if (half_space && rec.t >= 1) {
            try {
                exact_col = csv_number(f_sq_exact(cfg.n, static_cast<int>(rec.t)) * scale);
            } catch (const std::invalid_argument&) {
            }
            try {
                approx_col = csv_number(f_sq_approx(cfg.n, static_cast<int>(rec.t)) * scale);
            } catch (const std::invalid_argument&) {
            }
        }
        out << rec.t << ',' << csv_number(rec.f2 * scale) << ','
            << csv_number(rec.f4 * scale) << ',' << csv_number(rec.f * scale) << ','
            << exact_col << ',' << approx_col << ',' << rmt_col << '\n';
    }
}

// Long-format spectra of the truncated propagator: one row per singular
// value (kind "sv", squared value in value_re) and per complex eigenvalue
// (kind "eig").  t = 0 is the identity control row.
inline void run_spectrum(const ExperimentConfig& cfg, std::ostream& out) {
    const ProjectorRange range = cfg.range();
    write_provenance(out, cfg);
    out << "t,kind,index,value_re,value_im\n";
    const CMatrix b = build_baker(cfg.n);
    CMatrix acc = CMatrix::Identity(cfg.n, cfg.n);
    for (long t = 0; t <= cfg.t_max; ++t) {
        const CMatrix trunc = truncate(acc, range);
        const std::vector<double> mu = singular_values_squared(trunc);
        for (std::size_t i = 0; i < mu.size(); ++i)
            out << t << ",sv," << i << ',' << csv_number(mu[i]) << ",0\n";
        const std::vector<Complex> eig = complex_eigenvalues(trunc);
        for (std::size_t i = 0; i < eig.size(); ++i)
            out << t << ",eig," << i << ',' << csv_number(eig[i].real()) << ','
                << csv_number(eig[i].imag()) << '\n';
        if (t < cfg.t_max) acc = b * acc;
    }
}

// Per-sample commutator norms over CUE draws followed by the summary rows.
inline void run_cue_baseline(const ExperimentConfig& cfg, std::ostream& out) {
    const ProjectorRange range = cfg.range();
    const EnsembleEstimate est =
        cue_empirical_f(cfg.n, range.size(), cfg.n_samples, cfg.seed);
    write_provenance(out, cfg);
    out << "kind,index,value\n";
    for (std::size_t i = 0; i < est.samples.size(); ++i)
        out << "sample," << i << ',' << csv_number(est.samples[i]) << '\n';
    out << "mean,," << csv_number(est.mean) << '\n';
    out << "stderr,," << csv_number(est.standard_error) << '\n';
    if (range.size() <= cfg.n - 1)
        out << "formula,," << csv_number(rmt_saturation(cfg.n, range.size())) << '\n';
    else
        out << "formula,,0\n";
}

struct VerifyCheck {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

class VerifyReport {
  public:
    void add(const std::string& name, double measured, double tolerance) {
        checks_.push_back({name, measured, tolerance, measured <= tolerance});
    }
    void add_flag(const std::string& name, bool ok) {
        checks_.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
    }
    bool all_passed() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return true;
    }
    void print(std::ostream& out) const {
        for (const auto& c : checks_)
            out << (c.passed ? "PASS" : "FAIL") << "  " << c.name
                << "  measured=" << csv_number(c.measured)
                << " tolerance=" << csv_number(c.tolerance) << '\n';
        out << (all_passed() ? "verify: all checks passed"
                             : "verify: FAILURES present")
            << '\n';
    }

  private:
    std::vector<VerifyCheck> checks_;
};

inline double rel_err(double measured, double expected) {
    return std::abs(measured - expected) / std::abs(expected);
}

inline CMatrix antidiagonal_flip(Eigen::Index n) {
    CMatrix r = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) r(k, n - 1 - k) = 1.0;
    return r;
}

// Cross-module invariant suite at reduced scale.  Covers the per-module
// invariants: unitarity, involution and periodicity of the classical orbit
// table, the position-element oracle, the closed-form identities, spectral
// consistency and the CUE baseline.
inline VerifyReport run_verify(const ExperimentConfig& cfg) {
    VerifyReport report;
    const Eigen::Index n = cfg.n;
    const BakerConfig bc = BakerConfig::from_dimension(n);

    // classical layer
    {
        bool involution = true;
        for (int t = 1; t <= 16 && involution; ++t) {
            const std::uint64_t count = std::uint64_t{1} << t;
            for (std::uint64_t nu = 0; nu < count; ++nu)
                if (bit_reverse(bit_reverse(nu, t), t) != nu) {
                    involution = false;
                    break;
                }
        }
        report.add_flag("bit_reverse involution t<=16", involution);

        double worst = 0.0;
        for (int t = 1; t <= 10; ++t) {
            const PeriodicOrbitTable table = periodic_points(t);
            for (const auto& e : table.entries) {
                PhasePoint x{std::fmod(e.q, 1.0), std::fmod(e.p, 1.0)};
                for (int i = 0; i < t; ++i) x = baker_step(x);
                double dq = std::abs(x.q - e.q);
                double dp = std::abs(x.p - e.p);
                dq = std::min(dq, 1.0 - dq);  // torus distance
                dp = std::min(dp, 1.0 - dp);
                worst = std::max(worst, std::max(dq, dp));
            }
        }
        report.add("periodic points return after t steps (t<=10)", worst, 1e-10);
    }

    // DFT and propagator unitarity
    {
        double worst = 0.0;
        for (Eigen::Index sz : {Eigen::Index(2), Eigen::Index(16), Eigen::Index(64), n})
            worst = std::max(worst, unitarity_defect(dft_shifted(sz)));
        report.add("shifted DFT unitary", worst, 1e-12);

        const CMatrix g4 = dft_shifted(4);
        const CMatrix r4 = antidiagonal_flip(4);
        report.add("shifted DFT parity R G R = G",
                   (r4 * g4 * r4 - g4).cwiseAbs().maxCoeff(), 1e-12);

        const CMatrix b = build_baker(n);
        report.add("baker propagator unitary", unitarity_defect(b), 1e-12);
        report.add("B equals B_1 entrywise",
                   (b - build_semiquantum(n, 1)).cwiseAbs().maxCoeff(), 1e-12);

        const CMatrix rn = antidiagonal_flip(n);
        report.add("baker parity R B R = B", (rn * b * rn - b).cwiseAbs().maxCoeff(),
                   1e-11);

        double worst_sq = 0.0;
        for (int t = 1; t <= bc.max_time; ++t)
            worst_sq = std::max(worst_sq, unitarity_defect(build_semiquantum(n, t)));
        report.add("semiquantum propagators unitary (t<=T)", worst_sq, 1e-12);
    }

    // position-representation oracle
    {
        double worst = 0.0;
        for (Eigen::Index dim : {Eigen::Index(16), Eigen::Index(64)}) {
            const BakerConfig c = BakerConfig::from_dimension(dim);
            for (int t = 1; t <= c.max_time; ++t) {
                const CMatrix bt = build_semiquantum(dim, t);
                for (Eigen::Index k = 0; k < dim; ++k)
                    for (Eigen::Index col = 0; col < dim; ++col)
                        worst = std::max(worst,
                                         std::abs(bt(k, col) -
                                                  semiquantum_position_element(
                                                      dim, t, k, col)));
            }
        }
        report.add("position-element closed form matches construction", worst, 1e-12);
    }

    // closed-form identities
    {
        const ProjectorRange half{0, n / 2 - 1};
        double worst2 = 0.0;
        for (int t = 1; t <= bc.max_time; ++t)
            worst2 = std::max(worst2,
                              rel_err(f2_of_truncation(build_semiquantum(n, t), half),
                                      static_cast<double>(n) / 4.0));
        report.add("semiquantum f2 equals N/4", worst2, 1e-9);

        double worst_f = 0.0;
        for (int t = 1; t <= bc.max_time - 1; ++t)
            worst_f = std::max(worst_f,
                               rel_err(f_commutator(build_semiquantum(n, t), half),
                                       f_sq_exact(n, t)));
        report.add("semiquantum f matches exact closed form", worst_f, 1e-8);
    }

    // triple-route equality and bounds at N = 64, quantum evolution
    {
        const Eigen::Index dim = 64;
        const ProjectorRange half{0, dim / 2 - 1};
        const CMatrix b = build_baker(dim);
        CMatrix acc = b;
        double route_err = 0.0;
        double bound_excess = 0.0;
        for (int t = 1; t <= 6; ++t) {
            const double via_mu = f_commutator(acc, half);
            const double via_diff =
                f2_of_truncation(acc, half) - f4_of_truncation(acc, half);
            const double via_cross = f_cross_block(acc, half);
            const double ref = std::max(std::abs(via_mu), 1e-14);
            route_err = std::max(route_err, std::abs(via_mu - via_diff) / ref);
            route_err = std::max(route_err, std::abs(via_mu - via_cross) / ref);
            bound_excess = std::max(bound_excess,
                                    via_mu - static_cast<double>(half.size()) / 4.0);
            acc = b * acc;
        }
        report.add("f(t) triple-route agreement (N=64)", route_err, 1e-9);
        report.add("f(t) <= J/4 bound (N=64)", bound_excess, 1e-9);

        // complement symmetry: same commutator for P and I - P
        const ProjectorRange upper{dim / 2, dim - 1};
        const CMatrix b3 = matrix_power(b, 3);
        report.add("complement projector symmetry (N=64, t=3)",
                   rel_err(f_commutator(b3, upper), f_commutator(b3, half)), 1e-9);
    }

    // analytics layer
    {
        report.add("digamma(1) = -gamma", std::abs(digamma(1.0) + euler_gamma), 1e-12);
        report.add("digamma(1/2) = -gamma - 2 ln 2",
                   std::abs(digamma(0.5) + euler_gamma + 2.0 * std::log(2.0)), 1e-12);
        const auto [exact, closed] = sum_asymptotic_check(256);
        report.add("digamma asymptotic at M=256", rel_err(exact, closed), 1e-4);

        report.add_flag("RMT saturation J <-> N-J symmetry",
                        rmt_saturation(200, 60) == rmt_saturation(200, 140));

        const CMatrix u = sample_cue(48, cfg.seed);
        report.add("CUE sample unitary", unitarity_defect(u), 1e-12);
        const std::vector<double> mu =
            singular_values_squared(truncate(u, ProjectorRange{0, 23}));
        report.add("CUE truncation subunitary", mu.front() - 1.0, 1e-10);

        const EnsembleEstimate est = cue_empirical_f(64, 32, 50, cfg.seed);
        const double target = rmt_saturation(64, 32);
        report.add("CUE empirical mean vs formula (units of SE)",
                   std::abs(est.mean - target) / est.standard_error, 3.0);
    }

    // spectral consistency on a truncation
    {
        const CMatrix u = sample_cue(32, cfg.seed + 1);
        const CMatrix trunc = truncate(u, ProjectorRange{0, 15});
        const std::vector<double> mu = singular_values_squared(trunc);
        double mu_sum = 0.0, mu_max = 0.0;
        for (double m : mu) {
            mu_sum += m;
            mu_max = std::max(mu_max, m);
        }
        report.add("sum of mu equals Frobenius norm",
                   rel_err(mu_sum, frobenius_norm_sq(trunc)), 1e-9);
        const std::vector<Complex> eig = complex_eigenvalues(trunc);
        Complex eig_sum = 0.0;
        double eig_mod = 0.0;
        for (const Complex& l : eig) {
            eig_sum += l;
            eig_mod = std::max(eig_mod, std::abs(l));
        }
        report.add("sum of eigenvalues equals trace",
                   std::abs(eig_sum - trunc.trace()) / std::abs(trunc.trace()), 1e-8);
        report.add("Weyl bound max|lambda|^2 <= max mu", eig_mod * eig_mod - mu_max,
                   1e-10);
    }

    return report;
}

}  // namespace bakerotoc
