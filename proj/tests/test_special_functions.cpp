#include <catch2/catch_amalgamated.hpp>

#include <torusgreen/torusgreen.hpp>

using namespace torusgreen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values below were computed independently at 40-digit working
// precision and truncated to double.

TEST_CASE("eta on the square lattice matches the gamma closed form")
{
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    const double expected = std::tgamma(0.25) / (2.0 * std::pow(pi, 0.75));
    const complex e = dedekind_eta(complex(0.0, 1.0));
    CHECK_THAT(e.real(), WithinRel(expected, 1e-13));
    CHECK_THAT(e.real(), WithinRel(0.76822542232605666, 1e-14));
    CHECK_THAT(e.imag(), WithinAbs(0.0, 1e-16));
}

TEST_CASE("eta at a generic complex modulus matches the reference")
{
    const complex e = dedekind_eta(complex(0.2, 1.5));
    CHECK_THAT(e.real(), WithinRel(0.67429242520317535, 1e-14));
    CHECK_THAT(e.imag(), WithinRel(0.035286270968493058, 1e-13));
}

TEST_CASE("eta overloads agree")
{
    const complex tau(0.3, 1.2);
    CHECK(dedekind_eta(tau) == dedekind_eta(nome_from_tau(tau)));
}

TEST_CASE("theta1 matches references at pinned points")
{
    const nome square = nome_from_tau(complex(0.0, 1.0));
    CHECK_THAT(theta1(complex(0.25, 0.0), square).real(),
               WithinRel(0.64358976403858588, 1e-14));
    CHECK_THAT(theta1(complex(0.5, 0.0), square).real(),
               WithinRel(0.91357913815611682, 1e-14));
    CHECK_THAT(theta1(complex(0.25, 0.0), square).imag(), WithinAbs(0.0, 1e-16));

    const nome generic = nome_from_tau(complex(0.2, 1.5));
    const complex v = theta1(complex(0.3, 0.4), generic);
    CHECK_THAT(v.real(), WithinRel(0.84188897088665689, 1e-13));
    CHECK_THAT(v.imag(), WithinRel(0.72493399197857650, 1e-13));
}

TEST_CASE("product form and sine series are two routes to the same value")
{
    detail::sampler rng(2024);
    const complex taus[] = {{0.0, 1.0}, {0.2, 1.5}, {0.05, 0.6}, {0.0, 3.0}, {-0.4, 0.8}};
    for (const complex tau : taus) {
        const nome nm = nome_from_tau(tau);
        for (int i = 0; i < 200; ++i) {
            const complex z = rng.box(-1.0, 1.0, -1.0, 1.0);
            const complex p = theta1(z, nm);
            const complex s = theta1_series(z, nm);
            REQUIRE_THAT(std::abs(p - s), WithinAbs(0.0, 1e-13 * std::abs(s)));
        }
    }
}

TEST_CASE("theta1 is odd and vanishes exactly on the lattice")
{
    const nome nm = nome_from_tau(complex(0.2, 1.5));
    CHECK(theta1(complex(0.0, 0.0), nm) == complex(0.0, 0.0));

    // at nonzero lattice points the zero is only as exact as sin(pi*m)
    CHECK(std::abs(theta1(complex(1.0, 0.0), nm)) < 1e-14);

    detail::sampler rng(99);
    for (int i = 0; i < 100; ++i) {
        const complex z = rng.box(-1.0, 1.0, -1.0, 1.0);
        const complex a = theta1(z, nm);
        const complex b = theta1(-z, nm);
        REQUIRE_THAT(std::abs(a + b), WithinAbs(0.0, 1e-12 * std::max(1.0, std::abs(a))));
    }
}

TEST_CASE("quasi-periodicity under both lattice shifts")
{
    const complex tau(0.2, 1.5);
    const nome nm = nome_from_tau(tau);
    detail::sampler rng(5);
    for (int i = 0; i < 50; ++i) {
        const complex z = rng.box(-1.0, 1.0, -1.0, 1.0);
        const complex base = theta1(z, nm);

        const complex shift1 = theta1(z + 1.0, nm);
        REQUIRE_THAT(std::abs(shift1 + base), WithinAbs(0.0, 1e-11 * std::abs(base)));

        const complex shift_tau = theta1(z + tau, nm);
        const complex expected = -std::exp(complex(0.0, -two_pi) * z) / nm.q * base;
        REQUIRE_THAT(std::abs(shift_tau - expected), WithinAbs(0.0, 1e-10 * std::abs(shift_tau)));
    }
}

TEST_CASE("theta1 prime at zero equals 2 pi eta cubed")
{
    const complex taus[] = {{0.0, 1.0}, {0.2, 1.5}, {0.3, 1.2}, {0.0, 0.08}};
    for (const complex tau : taus) {
        const nome nm = nome_from_tau(tau);
        const complex lhs = theta1_prime_at_zero(nm);
        const complex eta = dedekind_eta(nm);
        const complex rhs = two_pi * eta * eta * eta;
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-14 * std::abs(rhs)));
    }

    // pinned references on both lattices
    CHECK_THAT(theta1_prime_at_zero(nome_from_tau(complex(0.0, 1.0))).real(),
               WithinRel(2.8486946039877873, 1e-14));
    const complex g = theta1_prime_at_zero(nome_from_tau(complex(0.2, 1.5)));
    CHECK_THAT(g.real(), WithinRel(1.9104778618051287, 1e-14));
    CHECK_THAT(g.imag(), WithinRel(0.30213902837948073, 1e-13));
}

TEST_CASE("theta1 prime matches a centered finite difference of theta1")
{
    const nome nm = nome_from_tau(complex(0.3, 1.2));
    const double h = 1e-6;
    const complex fd = (theta1(complex(h, 0.0), nm) - theta1(complex(-h, 0.0), nm)) / (2.0 * h);
    CHECK_THAT(std::abs(fd - theta1_prime_at_zero(nm)), WithinAbs(0.0, 1e-9));
}

TEST_CASE("log_abs_theta1 equals the direct logarithm inside the cell")
{
    const nome nm = nome_from_tau(complex(0.2, 1.5));
    detail::sampler rng(31);
    for (int i = 0; i < 50; ++i) {
        const complex z = rng.box(-0.45, 0.45, -0.6, 0.6);
        if (std::abs(z) < 1e-3)
            continue;
        const double direct = std::log(std::abs(theta1(z, nm)));
        REQUIRE_THAT(log_abs_theta1(z, nm), WithinAbs(direct, 1e-12 * std::max(1.0, std::abs(direct))));
    }
}

TEST_CASE("log_abs_theta1 applies the exact quasi-period correction at large shifts")
{
    const complex tau(0.0, 1.0);
    const nome nm = nome_from_tau(tau);
    const complex z(0.3, 0.2);
    const double base = log_abs_theta1(z, nm);

    // theta1 itself overflows long before n = 40; the log route must not
    const double n = 40.0;
    const double shifted = log_abs_theta1(z + n * tau, nm);
    const complex z_red = reduce_centered(z, tau).point;
    const double expected = base + pi * n * n * tau.imag() + two_pi * n * z_red.imag();
    CHECK_THAT(shifted, WithinAbs(expected, 1e-8));

    CHECK(std::isinf(log_abs_theta1(complex(3.0, 4.0), nm)));
    CHECK(log_abs_theta1(complex(3.0, 4.0), nm) < 0.0);
}

TEST_CASE("moduli outside the supported half-plane are rejected")
{
    CHECK_THROWS_AS(nome_from_tau(complex(0.0, -1.0)), domain_error);
    CHECK_THROWS_AS(nome_from_tau(complex(0.5, 0.0)), domain_error);
    CHECK_THROWS_AS(nome_from_tau(complex(0.0, 0.04)), domain_error);
    CHECK_THROWS_AS(nome_from_tau(complex(std::numeric_limits<double>::quiet_NaN(), 1.0)),
                    domain_error);
    CHECK_NOTHROW(nome_from_tau(complex(0.0, 0.05)));
}

TEST_CASE("series controls are validated and the term cap is enforced")
{
    series_control bad;
    bad.max_terms = 0;
    CHECK_THROWS_AS(validate(bad), domain_error);

    series_control negative;
    negative.term_tolerance = -1e-16;
    CHECK_THROWS_AS(validate(negative), domain_error);

    // a large imaginary part needs more terms than this cap allows
    series_control tiny;
    tiny.max_terms = 2;
    const nome nm = nome_from_tau(complex(0.0, 1.0));
    CHECK_THROWS_AS(theta1(complex(0.3, 5.0), nm, tiny), convergence_error);
    CHECK_THROWS_AS(theta1_series(complex(0.3, 5.0), nm, tiny), convergence_error);

    CHECK_THROWS_AS(theta1(complex(std::numeric_limits<double>::infinity(), 0.0), nm),
                    domain_error);
}
