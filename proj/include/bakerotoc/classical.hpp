#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bakerotoc {

// Point on the unit torus [0,1) x [0,1).
struct PhasePoint {
    double q;
    double p;
};

// One application of the baker transformation:
// (q, p) -> (2q mod 1, (p + [2q]) / 2).
// The discontinuity at q = 1/2 is resolved to the right half, so q = 1/2
// carries the bit 1.
inline PhasePoint baker_step(PhasePoint x) {
    const int bit = (x.q < 0.5) ? 0 : 1;
    double q = 2.0 * x.q - bit;
    double p = 0.5 * (x.p + bit);
    if (q >= 1.0) q -= 1.0;  // guard against rounding at the seam
    if (q < 0.0) q += 1.0;
    return {q, p};
}

// Inverse transformation: (q, p) -> ((q + [2p]) / 2, 2p mod 1).
inline PhasePoint baker_step_inverse(PhasePoint x) {
    const int bit = (x.p < 0.5) ? 0 : 1;
    double p = 2.0 * x.p - bit;
    double q = 0.5 * (x.q + bit);
    if (p >= 1.0) p -= 1.0;
    if (p < 0.0) p += 1.0;
    return {q, p};
}

// Reversal of the t-bit binary string of nu.  An involution on [0, 2^t - 1].
inline std::uint64_t bit_reverse(std::uint64_t nu, int t) {
    if (t < 1 || t > 63)
        throw std::invalid_argument("bit_reverse: bit width must be in [1, 63]");
    if (nu >> t)
        throw std::invalid_argument("bit_reverse: value does not fit in the given width");
    std::uint64_t out = 0;
    for (int k = 0; k < t; ++k)
        out |= ((nu >> k) & 1u) << (t - 1 - k);
    return out;
}

// The 2^t fixed points of the t-fold iterated map.  The position is
// q = nu / (2^t - 1) and the momentum is the bit-reversed nu_bar / (2^t - 1);
// for t = 1 the two fixed points sit at the corners (0,0) and (1,1).
struct PeriodicOrbitTable {
    struct Entry {
        std::uint64_t nu;
        std::uint64_t nu_bar;
        double q;
        double p;
    };
    int t = 0;
    std::vector<Entry> entries;
};

inline PeriodicOrbitTable periodic_points(int t) {
    if (t < 1 || t > 30)
        throw std::invalid_argument("periodic_points: period must be in [1, 30]");
    PeriodicOrbitTable table;
    table.t = t;
    const std::uint64_t count = std::uint64_t{1} << t;
    const double denom = static_cast<double>(count - 1);
    table.entries.reserve(count);
    for (std::uint64_t nu = 0; nu < count; ++nu) {
        const std::uint64_t nu_bar = bit_reverse(nu, t);
        // t = 1 has denom 1, so nu = 1 gives the corner point (1,1) ~ (0,0)
        table.entries.push_back({nu, nu_bar,
                                 static_cast<double>(nu) / denom,
                                 static_cast<double>(nu_bar) / denom});
    }
    return table;
}

}  // namespace bakerotoc
