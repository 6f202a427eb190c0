// SPDX-License-Identifier: Apache-2.0
#include "fris/errors.hpp"
#include "fris/mixture.hpp"
#include "fris/quadrature.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace fris;

namespace {
SpectralModel spectrum(std::vector<SpectralGroup> g, int dimension = 0)
{
    SpectralModel s;
    s.groups = std::move(g);
    for (const auto &x : s.groups) {
        s.rank += x.multiplicity;
        s.trace_c += x.lambda * x.multiplicity;
    }
    s.dimension = dimension ? dimension : s.rank;
    return s;
}

double coef(const MixtureModel &m, double lambda, int k)
{
    for (const auto &t : m.terms)
        if (t.lambda == lambda && t.k == k)
            return t.c;
    FAIL("term not found");
    return 0.0;
}

SpectralModel random_spectrum(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> q_d(1, 5), m_d(1, 4);
    std::uniform_real_distribution<double> l_d(std::log(0.1), std::log(10.0));
    const int q = q_d(rng);
    std::vector<SpectralGroup> g;
    while (static_cast<int>(g.size()) < q) {
        const double l = std::exp(l_d(rng));
        bool ok = true;
        for (const auto &x : g)
            ok = ok && std::abs(x.lambda - l) > 0.05 * std::max(x.lambda, l);
        if (ok)
            g.push_back({l, m_d(rng)});
    }
    std::sort(g.begin(), g.end(), [](auto &a, auto &b) { return a.lambda > b.lambda; });
    return spectrum(g);
}
} // namespace

TEST_CASE("closed-form coefficient examples")
{
    const auto m = coefficients(spectrum({{2.0, 1}, {1.0, 1}}));
    CHECK(m.regime == Regime::simple);
    CHECK(coef(m, 2.0, 1) == doctest::Approx(2.0));
    CHECK(coef(m, 1.0, 1) == doctest::Approx(-1.0));
    CHECK(coefficient_sum(m) == doctest::Approx(1.0));

    const auto single = coefficients(spectrum({{2.5, 3}}, 5));
    CHECK(single.regime == Regime::equal);
    REQUIRE(single.terms.size() == 1);
    CHECK(single.terms[0].c == 1.0);
    CHECK(single.terms[0].k == 3);

    const auto unc = coefficients(spectrum({{1.0, 25}}));
    CHECK(unc.regime == Regime::uncorrelated);
}

TEST_CASE("repeated-pole coefficients against exact partial fractions")
{
    // (1+3s)^-2 (1+s)^-1 = (3/2)(1+3s)^-2 - (3/4)(1+3s)^-1 + (1/4)(1+s)^-1
    const auto m = coefficients(spectrum({{3.0, 2}, {1.0, 1}}));
    CHECK(m.regime == Regime::general);
    CHECK(coef(m, 3.0, 2) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(coef(m, 3.0, 1) == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(coef(m, 1.0, 1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(coefficient_sum(m) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("randomised spectra: coefficient sum and mean identity")
{
    std::mt19937_64 rng(20260101);
    int used = 0;
    while (used < 200) {
        const auto s = random_spectrum(rng);
        const auto m = coefficients(s);
        if (m.condition_estimate >= 1e8)
            continue;
        ++used;
        CHECK(std::abs(coefficient_sum(m) - 1.0) <= 1e-8 * m.condition_estimate);
        CHECK(std::abs(mixture_mean(m) - s.trace_c) <= 1e-8 * s.trace_c);
    }
}

TEST_CASE("regime collapse of the general path")
{
    std::mt19937_64 rng(5);
    for (int n = 0; n < 50; ++n) {
        // all simple
        auto s = random_spectrum(rng);
        for (auto &g : s.groups)
            g.multiplicity = 1;
        s.rank = static_cast<int>(s.groups.size());
        s.dimension = s.rank;
        if (s.groups.size() < 2)
            continue;
        const auto gen = coefficients_general(s), closed = coefficients(s);
        CHECK(closed.regime == Regime::simple);
        for (const auto &t : closed.terms)
            CHECK(std::abs(coef(gen, t.lambda, 1) - t.c) <= 1e-10 * std::abs(t.c));
    }
    for (int m = 1; m <= 8; ++m) {
        const auto gen = coefficients_general(spectrum({{0.7, m}}));
        for (const auto &t : gen.terms)
            CHECK(t.c == (t.k == m ? 1.0 : 0.0));
    }
}

TEST_CASE("single-term densities")
{
    // mpmath: 2 K0(2), 1 - 2 K1(2)
    const auto m1 = coefficients(spectrum({{1.0, 1}}));
    CHECK(pdf_g0(m1, 1.0) == doctest::Approx(0.227787745499066871).epsilon(1e-13));
    CHECK(cdf_g0(m1, 1.0) == doctest::Approx(0.720268236366955145).epsilon(1e-13));
    CHECK(cdf_g0(m1, 0.0) == 0.0);
    CHECK(std::isinf(pdf_g0(m1, 0.0)));
    // 1 - (2/Gamma(25)) K25(2)
    const auto m25 = coefficients(spectrum({{1.0, 25}}));
    CHECK(cdf_g0(m25, 1.0) == doctest::Approx(0.0407744320000228414724).epsilon(1e-12));
    CHECK_THROWS_AS(pdf_g0(m1, -1.0), std::domain_error);
    CHECK_THROWS_AS(cdf_g0(m1, -1.0), std::domain_error);
}

TEST_CASE("small-argument cdf branch joins the direct branch")
{
    for (int k : {1, 2, 5, 25, 64})
        for (double lambda : {0.3, 1.0, 4.0}) {
            // locate the switch point q = 0.9 by bisection and compare both sides
            double lo = 1e-12, hi = 1e3 * lambda;
            for (int it = 0; it < 200; ++it) {
                const double mid = std::sqrt(lo * hi);
                (std::exp(log_sf_k(k, lambda, mid)) >= 0.9 ? lo : hi) = mid;
            }
            const double a = cdf_k(k, lambda, lo), b = cdf_k(k, lambda, hi);
            CHECK(std::abs(a - b) <= 1e-10 * b);
            CHECK(a == doctest::Approx(0.1).epsilon(1e-6));
        }
}

TEST_CASE("density integrates to one and cdf behaves")
{
    const std::vector<SpectralModel> cases = {spectrum({{1.0, 1}}), spectrum({{1.0, 25}}), spectrum({{3.0, 2}, {1.0, 1}}),
                                              spectrum({{4.0, 3}, {2.0, 2}, {0.5, 1}}),
                                              spectrum({{5.0, 1}, {3.0, 1}, {2.0, 1}, {0.25, 1}})};
    for (const auto &s : cases) {
        const auto m = coefficients(s);
        const double med = s.trace_c;
        auto f = [&](double g) { return g <= 0.0 ? 0.0 : pdf_g0(m, g); };
        const double total = integrate_gk15(f, 0.0, med, 0.0, 1e-10).value + integrate_to_infinity(f, med, 0.0, 1e-10).value;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(cdf_g0(m, 10.0 * s.trace_c * s.rank) > 0.99);
        double prev = 0.0;
        const double top = 20.0 * s.trace_c;
        for (int i = 0; i <= 10000; ++i) {
            const double g = top * i / 10000.0;
            const double c = cdf_g0(m, g);
            CHECK(c >= prev);
            CHECK(c <= 1.0);
            if (g > 0.0)
                CHECK(pdf_g0(m, g) >= 0.0);
            prev = c;
        }
    }
}

TEST_CASE("density at zero for rank >= 2")
{
    const auto m = coefficients(spectrum({{4.0, 3}, {2.0, 2}, {0.5, 1}}));
    CHECK(pdf_g0(m, 0.0) == doctest::Approx(pdf_g0(m, 1e-9)).epsilon(1e-6));
    const auto s = coefficients(spectrum({{5.0, 1}, {3.0, 1}, {2.0, 1}, {0.25, 1}}));
    CHECK(pdf_g0(s, 0.0) == doctest::Approx(pdf_g0(s, 1e-9)).epsilon(1e-6));
}

TEST_CASE("mixture mean")
{
    CHECK(mixture_mean(coefficients(spectrum({{1.0, 25}}))) == doctest::Approx(25.0));
    CHECK(mixture_mean(coefficients(spectrum({{2.0, 1}, {1.0, 1}}))) == doctest::Approx(3.0));
}

TEST_CASE("regime names round trip")
{
    for (auto r : {Regime::general, Regime::simple, Regime::equal, Regime::uncorrelated})
        CHECK(regime_from_name(regime_name(r)) == r);
    CHECK_THROWS(regime_from_name("nope"));
}
