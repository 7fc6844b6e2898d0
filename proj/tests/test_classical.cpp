#include "bakerotoc/classical.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace bakerotoc;

namespace {

double torus_dist(double a, double b) {
    double d = std::abs(a - b);
    return std::min(d, 1.0 - d);
}

}  // namespace

TEST_CASE("baker_step on known points") {
    auto fixed = baker_step({0.0, 0.0});
    CHECK(fixed.q == 0.0);
    CHECK(fixed.p == 0.0);

    // period-2 orbit
    auto p2 = baker_step({1.0 / 3.0, 2.0 / 3.0});
    CHECK(p2.q == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(p2.p == Catch::Approx(1.0 / 3.0).margin(1e-15));

    auto x = baker_step({0.7, 0.2});
    CHECK(x.q == Catch::Approx(0.4).margin(1e-15));
    CHECK(x.p == Catch::Approx(0.6).margin(1e-15));

    // discontinuity resolved to the right half
    auto half = baker_step({0.5, 0.0});
    CHECK(half.q == 0.0);
    CHECK(half.p == 0.5);
}

TEST_CASE("baker_step inverse recovers random points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        PhasePoint x{unit(rng), unit(rng)};
        PhasePoint back = baker_step_inverse(baker_step(x));
        CHECK(torus_dist(back.q, x.q) < 1e-14);
        CHECK(torus_dist(back.p, x.p) < 1e-14);
    }
}

TEST_CASE("baker_step acts as a two-sided bit shift on dyadic points") {
    // q = 0.1011b, p = 0.0110b: the exposed q-bit moves to the front of p
    PhasePoint x{11.0 / 16.0, 6.0 / 16.0};
    PhasePoint y = baker_step(x);
    CHECK(y.q == Catch::Approx(0.375).margin(1e-15));   // 0.011b
    CHECK(y.p == Catch::Approx(11.0 / 16.0).margin(1e-15));  // 0.1011b

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t qbits = rng() & ((1ull << 40) - 1);
        const std::uint64_t pbits = rng() & ((1ull << 40) - 1);
        PhasePoint z{std::ldexp(static_cast<double>(qbits), -40),
                     std::ldexp(static_cast<double>(pbits), -40)};
        const int lead = (qbits >> 39) & 1;
        PhasePoint w = baker_step(z);
        const double q_expect = std::ldexp(static_cast<double>(qbits & ((1ull << 39) - 1)), -39);
        const double p_expect = 0.5 * (z.p + lead);
        CHECK(w.q == Catch::Approx(q_expect).margin(1e-13));
        CHECK(w.p == Catch::Approx(p_expect).margin(1e-13));
    }
}

TEST_CASE("bit_reverse known values and errors") {
    CHECK(bit_reverse(1, 2) == 2);
    CHECK(bit_reverse(3, 2) == 3);
    for (int t = 1; t <= 8; ++t) CHECK(bit_reverse(0, t) == 0);
    CHECK(bit_reverse(1, 3) == 4);
    CHECK_THROWS_AS(bit_reverse(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(bit_reverse(0, 0), std::invalid_argument);
}

TEST_CASE("bit_reverse is an involution") {
    for (int t = 1; t <= 20; ++t) {
        const std::uint64_t count = std::uint64_t{1} << t;
        const std::uint64_t stride = (t <= 12) ? 1 : (count >> 12);
        for (std::uint64_t nu = 0; nu < count; nu += stride)
            REQUIRE(bit_reverse(bit_reverse(nu, t), t) == nu);
    }
}

TEST_CASE("periodic_points small tables") {
    const auto t1 = periodic_points(1);
    REQUIRE(t1.entries.size() == 2);
    CHECK(t1.entries[0].q == 0.0);
    CHECK(t1.entries[1].q == 1.0);  // (1,1) ~ (0,0) on the torus

    const auto t2 = periodic_points(2);
    REQUIRE(t2.entries.size() == 4);
    CHECK(t2.entries[1].nu_bar == 2);
    CHECK(t2.entries[2].nu_bar == 1);
    CHECK(t2.entries[3].nu_bar == 3);

    const auto t3 = periodic_points(3);
    CHECK(t3.entries[1].nu_bar == 4);
    CHECK(t3.entries[1].q == Catch::Approx(1.0 / 7.0));
    CHECK(t3.entries[1].p == Catch::Approx(4.0 / 7.0));

    CHECK_THROWS_AS(periodic_points(0), std::invalid_argument);
    CHECK_THROWS_AS(periodic_points(31), std::invalid_argument);
}

TEST_CASE("periodic table counting and nu <-> nu_bar bijection") {
    for (int t = 1; t <= 12; ++t) {
        const auto table = periodic_points(t);
        REQUIRE(table.entries.size() == (std::size_t{1} << t));
        std::vector<bool> seen(table.entries.size(), false);
        for (const auto& e : table.entries) {
            REQUIRE_FALSE(seen[e.nu_bar]);
            seen[e.nu_bar] = true;
            CHECK(bit_reverse(e.nu_bar, t) == e.nu);
        }
    }
}

TEST_CASE("every table entry is periodic under floating iteration") {
    for (int t = 1; t <= 12; ++t) {
        const auto table = periodic_points(t);
        for (const auto& e : table.entries) {
            // the corner entry (1,1) is iterated as its torus representative
            PhasePoint x{std::fmod(e.q, 1.0), std::fmod(e.p, 1.0)};
            for (int i = 0; i < t; ++i) x = baker_step(x);
            REQUIRE(torus_dist(x.q, e.q) < 1e-10);
            REQUIRE(torus_dist(x.p, e.p) < 1e-10);
        }
    }
}
