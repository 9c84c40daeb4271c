#include <catch2/catch_amalgamated.hpp>

#include <torusgreen/torusgreen.hpp>

using namespace torusgreen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("lattice coordinates expand z in the basis {1, tau}")
{
    const complex tau(0.3, 1.0);
    const auto [a, b] = lattice_coordinates(complex(-0.25, 0.75), tau);
    CHECK_THAT(b, WithinAbs(0.75, 1e-15));
    CHECK_THAT(a, WithinAbs(-0.475, 1e-15));
    const complex back = detail::from_lattice_coordinates(a, b, tau);
    CHECK_THAT(std::abs(back - complex(-0.25, 0.75)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("fundamental-domain reduction hits the documented representatives")
{
    const complex tau_i(0.0, 1.0);

    SECTION("already reduced points are untouched")
    {
        const lattice_reduction r = reduce_to_fundamental_domain(complex(0.5, 0.0), tau_i);
        CHECK(r.point == complex(0.5, 0.0));
        CHECK(r.shift_1 == 0.0);
        CHECK(r.shift_tau == 0.0);
    }

    SECTION("1.5 + 2i on the square lattice reduces to 0.5")
    {
        const lattice_reduction r = reduce_to_fundamental_domain(complex(1.5, 2.0), tau_i);
        CHECK_THAT(std::abs(r.point - complex(0.5, 0.0)), WithinAbs(0.0, 1e-15));
        CHECK(r.shift_1 == 1.0);
        CHECK(r.shift_tau == 2.0);
    }

    SECTION("an oblique lattice mixes the real part through b * Re tau")
    {
        const complex tau(0.3, 1.0);
        const lattice_reduction r = reduce_to_fundamental_domain(complex(-0.25, 0.75), tau);
        CHECK_THAT(r.point.real(), WithinAbs(0.75, 1e-12));
        CHECK_THAT(r.point.imag(), WithinAbs(0.75, 1e-12));
        const complex back = r.point + r.shift_1 + r.shift_tau * tau;
        CHECK_THAT(std::abs(back - complex(-0.25, 0.75)), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("reduction is an exact lattice translation on random input")
{
    detail::sampler rng(12345);
    const complex taus[] = {{0.0, 1.0}, {0.2, 1.5}, {-0.4, 0.8}, {0.0, 0.06}};
    for (const complex tau : taus) {
        for (int i = 0; i < 200; ++i) {
            const complex z = rng.box(-8.0, 8.0, -8.0, 8.0);
            const lattice_reduction r = reduce_to_fundamental_domain(z, tau);
            const auto [a, b] = lattice_coordinates(r.point, tau);
            REQUIRE(a >= 0.0);
            REQUIRE(a < 1.0);
            REQUIRE(b >= 0.0);
            REQUIRE(b < 1.0);
            REQUIRE(r.shift_1 == std::floor(r.shift_1));
            REQUIRE(r.shift_tau == std::floor(r.shift_tau));
            const complex back = r.point + r.shift_1 + r.shift_tau * tau;
            REQUIRE_THAT(std::abs(back - z), WithinAbs(0.0, 1e-12 * std::max(1.0, std::abs(z))));
        }
    }
}

TEST_CASE("centered reduction lands in the symmetric half-open box")
{
    detail::sampler rng(777);
    const complex taus[] = {{0.0, 1.0}, {0.2, 1.5}, {-0.4, 0.8}};
    for (const complex tau : taus) {
        for (int i = 0; i < 200; ++i) {
            const complex z = rng.box(-8.0, 8.0, -8.0, 8.0);
            const lattice_reduction r = reduce_centered(z, tau);
            const auto [a, b] = lattice_coordinates(r.point, tau);
            REQUIRE(a >= -0.5);
            REQUIRE(a < 0.5);
            REQUIRE(b >= -0.5);
            REQUIRE(b < 0.5);
            const complex back = r.point + r.shift_1 + r.shift_tau * tau;
            REQUIRE_THAT(std::abs(back - z), WithinAbs(0.0, 1e-12 * std::max(1.0, std::abs(z))));
        }
    }
}

TEST_CASE("reduction boundaries are half-open")
{
    const complex tau_i(0.0, 1.0);

    // a - floor(a) rounds up to exactly 1.0 for a tiny negative a; the result
    // must still satisfy a < 1
    const lattice_reduction tiny = reduce_to_fundamental_domain(complex(-1e-18, 0.0), tau_i);
    const auto [ta, tb] = lattice_coordinates(tiny.point, tau_i);
    CHECK(ta >= 0.0);
    CHECK(ta < 1.0);
    CHECK(tb == 0.0);

    // coefficient exactly +1/2 belongs to the next cell in the centered box
    const lattice_reduction half = reduce_centered(complex(0.5, 0.0), tau_i);
    CHECK_THAT(half.point.real(), WithinAbs(-0.5, 1e-15));
    CHECK(half.shift_1 == 1.0);

    // just below +1/2 stays put
    const lattice_reduction below = reduce_centered(complex(0.5 - 1e-12, 0.0), tau_i);
    CHECK_THAT(below.point.real(), WithinAbs(0.5 - 1e-12, 1e-15));
    CHECK(below.shift_1 == 0.0);
}

TEST_CASE("torus distance is symmetric, lattice invariant, and vanishes on the lattice")
{
    const complex tau(0.2, 1.5);
    const complex z(0.9, 0.1);
    const complex w(0.05, 1.45);

    CHECK_THAT(torus_distance(z, w, tau), WithinRel(torus_distance(w, z, tau), 1e-14));
    CHECK_THAT(torus_distance(z + 3.0, w, tau), WithinAbs(torus_distance(z, w, tau), 1e-12));
    CHECK_THAT(torus_distance(z, w - 2.0 * tau, tau), WithinAbs(torus_distance(z, w, tau), 1e-12));

    // wrap-around: 0.9 and 0 are 0.1 apart on the unit-square torus
    CHECK_THAT(torus_distance(complex(0.9, 0.0), complex(0.0, 0.0), complex(0.0, 1.0)),
               WithinAbs(0.1, 1e-14));

    CHECK(torus_distance(complex(2.0, 3.0), complex(0.0, 0.0), complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("is_finite screens infinities and NaNs")
{
    CHECK(is_finite(complex(1.0, -2.0)));
    CHECK_FALSE(is_finite(complex(std::numeric_limits<double>::infinity(), 0.0)));
    CHECK_FALSE(is_finite(complex(0.0, std::numeric_limits<double>::quiet_NaN())));
    CHECK_FALSE(is_finite(std::numeric_limits<double>::quiet_NaN()));
}
