#include <catch2/catch_amalgamated.hpp>

#include <torusgreen/torusgreen.hpp>

using namespace torusgreen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values below were computed independently at 40-digit working
// precision and truncated to double.

namespace {
const torus square = torus_from_tau(complex(0.0, 1.0));
const torus generic = torus_from_tau(complex(0.2, 1.5));
}

TEST_CASE("green function matches the reference at a pinned point")
{
    CHECK_THAT(arakelov_green(square, complex(0.3, 0.2), complex(0.1, 0.0)),
               WithinAbs(-0.072974867114177279, 1e-14));
}

TEST_CASE("green function values at the half-periods are closed forms")
{
    // g_0((1+tau)/2) = log(2)/2 and g_0(1/2) = g_0(tau/2) = log(2)/4 on the
    // square lattice
    CHECK_THAT(arakelov_green(square, complex(0.5, 0.5), complex(0.0, 0.0)),
               WithinAbs(0.34657359027997265, 1e-13));
    CHECK_THAT(arakelov_green(square, complex(0.5, 0.0), complex(0.0, 0.0)),
               WithinAbs(0.17328679513998632, 1e-13));
    CHECK_THAT(arakelov_green(square, complex(0.0, 0.5), complex(0.0, 0.0)),
               WithinAbs(0.17328679513998632, 1e-13));
}

TEST_CASE("green function is symmetric and lattice invariant")
{
    detail::sampler rng(42);
    const complex tau = generic.modulus.tau;
    for (int i = 0; i < 100; ++i) {
        const complex z = rng.domain_point(tau);
        const complex w = rng.domain_point_away(tau, {z}, 1e-2);
        const double base = arakelov_green(generic, z, w);
        REQUIRE_THAT(arakelov_green(generic, w, z), WithinAbs(base, 1e-12));
        REQUIRE_THAT(arakelov_green(generic, z + 1.0, w), WithinAbs(base, 1e-10));
        REQUIRE_THAT(arakelov_green(generic, z - tau, w), WithinAbs(base, 1e-10));
        REQUIRE_THAT(arakelov_green(generic, z, w + tau), WithinAbs(base, 1e-10));
    }
}

TEST_CASE("green function survives shifts that overflow the raw theta product")
{
    const complex z(0.3, 0.2);
    const complex w(0.7, 0.1);
    const double base = arakelov_green(square, z, w);
    CHECK_THAT(arakelov_green(square, z + complex(0.0, 25.0), w), WithinAbs(base, 1e-9));
}

TEST_CASE("near the pole the green function looks like log|z-w| plus the log metric")
{
    // g(w+h, w) - log h -> log(2 pi eta^2) = 1.3105329259115095 on the square
    // lattice. Measure against the offset actually realized in doubles
    // ((w+h)-w differs from the nominal h by an ulp of w, which matters at
    // this tolerance).
    const complex w(0.35, 0.4);
    const complex wp = w + 1e-8;
    const double h = (wp - w).real();
    const double limit = arakelov_green(square, wp, w) - std::log(h);
    CHECK_THAT(limit, WithinAbs(1.3105329259115095, 1e-12));
    CHECK_THAT(std::exp(limit), WithinRel(arakelov_metric_torus(square), 1e-11));
}

TEST_CASE("green function rejects the pole and non-finite input")
{
    CHECK_THROWS_AS(arakelov_green(square, complex(0.2, 0.2), complex(0.2, 0.2)), pole_error);
    CHECK_THROWS_AS(arakelov_green(square, complex(1.2, 1.2), complex(0.2, 0.2)), pole_error);
    try {
        arakelov_green(square, complex(1.2, 1.2), complex(0.2, 0.2));
        FAIL("expected pole_error");
    } catch (const pole_error& e) {
        CHECK_THAT(std::abs(e.location() - complex(0.2, 0.2)), WithinAbs(0.0, 1e-12));
    }
    CHECK_THROWS_AS(
        arakelov_green(square, complex(std::numeric_limits<double>::infinity(), 0.0), 0.0),
        domain_error);
}

TEST_CASE("evans potential matches the reference at a pinned configuration")
{
    const punctured_torus pt = make_punctured_torus(square, complex(0.0, 0.0));
    CHECK_THAT(evans_selberg(pt, complex(0.5, 0.2), complex(0.3, 0.7)),
               WithinAbs(-0.71275440654638893, 1e-13));
}

TEST_CASE("evans potential has period 1 and tau-quasi-period 2 pi Im(u-w)")
{
    const punctured_torus pt = make_punctured_torus(square, complex(0.0, 0.0));
    const complex w(0.5, 0.2);
    const complex tau = square.modulus.tau;
    detail::sampler rng(7);
    for (int i = 0; i < 50; ++i) {
        const complex z = rng.domain_point_away(tau, {w, pt.puncture}, 0.05);
        const double base = evans_selberg(pt, w, z);
        REQUIRE_THAT(evans_selberg(pt, w, z + 1.0), WithinAbs(base, 1e-12));
        // 2 pi Im(u - w) = -0.4 pi here
        REQUIRE_THAT(evans_selberg(pt, w, z + tau), WithinAbs(base - 1.2566370614359173, 1e-12));
    }
}

TEST_CASE("evans potential signs its two poles correctly")
{
    const punctured_torus pt = make_punctured_torus(generic, complex(0.1, 0.1));
    const complex w(0.5, 0.9);
    // -log|z-w| blows down near w, +log|z-u| blows up near u
    CHECK(evans_selberg(pt, w, w + 1e-9) < -15.0);
    CHECK(evans_selberg(pt, w, pt.puncture + 1e-9) > 15.0);

    CHECK_THROWS_AS(evans_selberg(pt, w, w), pole_error);
    CHECK_THROWS_AS(evans_selberg(pt, w, pt.puncture), pole_error);
    // w on the puncture (mod lattice) is a degenerate configuration
    CHECK_THROWS_AS(evans_selberg(pt, pt.puncture + 1.0 + generic.modulus.tau, complex(0.4, 0.4)),
                    domain_error);
}

TEST_CASE("the puncture is stored as its fundamental-domain representative")
{
    const punctured_torus pt = make_punctured_torus(square, complex(1.25, 1.0));
    CHECK_THAT(std::abs(pt.puncture - complex(0.25, 0.0)), WithinAbs(0.0, 1e-12));
}

TEST_CASE("torus metric is the eta closed form")
{
    // c_tau = 2 pi |eta|^2 = 3.7081493546027438 on the square lattice
    const double c = arakelov_metric_torus(square);
    CHECK_THAT(c, WithinRel(3.7081493546027438, 1e-14));
    const double abs_eta = std::abs(dedekind_eta(square.modulus));
    CHECK_THAT(c, WithinRel(two_pi * abs_eta * abs_eta, 1e-15));
}

TEST_CASE("fundamental metric matches the reference and its defining limit")
{
    const punctured_torus pt = make_punctured_torus(square, complex(0.0, 0.0));
    const complex w(0.4, 0.3);
    const double c = fundamental_metric(pt, w);
    CHECK_THAT(c, WithinRel(2.1435660520190509, 1e-13));

    // exp(E_w(w+h) - log h) -> c as h -> 0
    const double h = 1e-7;
    const double recovered = std::exp(evans_selberg(pt, w, w + h) - std::log(h));
    CHECK_THAT(recovered, WithinRel(c, 1e-6));
}

TEST_CASE("fundamental metric blows up like 1/|w-u| at the puncture")
{
    const punctured_torus pt = make_punctured_torus(generic, complex(0.3, 0.5));
    const double r = 1e-6;
    const double c = fundamental_metric(pt, pt.puncture + r);
    CHECK_THAT(c * r, WithinRel(1.0, 1e-5));

    CHECK_THROWS_AS(fundamental_metric(pt, pt.puncture), pole_error);
}

TEST_CASE("bergman densities are 1/(2 Im tau) on both surfaces")
{
    CHECK(bergman_density_torus(square) == 0.5);
    CHECK(bergman_density_torus(torus_from_tau(complex(0.0, 2.0))) == 0.25);
    const punctured_torus pt = make_punctured_torus(generic, complex(0.0, 0.0));
    CHECK(bergman_density_punctured(pt) == bergman_density_torus(generic));
}

TEST_CASE("suita ratio on the square torus is the gamma closed form")
{
    // pi k / c^2 = 2 pi^2 / Gamma(1/4)^4 at tau = i
    const double g4 = std::pow(std::tgamma(0.25), 4.0);
    CHECK_THAT(suita_ratio_torus(square), WithinRel(2.0 * pi * pi / g4, 1e-13));
    CHECK_THAT(suita_ratio_torus(square), WithinRel(0.11423664526111591, 1e-13));
}

TEST_CASE("suita ratios are pi k / c^2 by definition")
{
    const punctured_torus pt = make_punctured_torus(generic, complex(0.0, 0.0));
    const complex w(0.4, 0.6);
    const double k = bergman_density_punctured(pt);
    const double c = fundamental_metric(pt, w);
    CHECK_THAT(suita_ratio_punctured(pt, w), WithinRel(pi * k / (c * c), 1e-15));

    const double kt = bergman_density_torus(generic);
    const double ct = arakelov_metric_torus(generic);
    CHECK_THAT(suita_ratio_torus(generic), WithinRel(pi * kt / (ct * ct), 1e-15));
}

TEST_CASE("moduli below the supported band are rejected at construction")
{
    CHECK_THROWS_AS(torus_from_tau(complex(0.0, 0.04)), domain_error);
    CHECK_THROWS_AS(torus_from_tau(complex(0.0, -2.0)), domain_error);
    CHECK_THROWS_AS(make_punctured_torus(square, complex(std::numeric_limits<double>::quiet_NaN(), 0.0)),
                    domain_error);
}
