// SPDX-License-Identifier: Apache-2.0
#include "fris/errors.hpp"
#include "fris/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

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

// one model per regime
std::vector<MixtureModel> regimes()
{
    return {coefficients(spectrum({{3.0, 2}, {1.5, 1}, {0.5, 3}})),
            coefficients(spectrum({{5.0, 1}, {3.0, 1}, {2.0, 1}, {0.25, 1}})),
            coefficients(spectrum({{2.0, 4}})),
            coefficients(spectrum({{1.0, 25}}))};
}

LinkBudget with_gain(double effective)
{
    LinkBudget b;
    return b.at_gamma_bar(effective / (b.l_f() * b.l_u()));
}
} // namespace

TEST_CASE("regime fixtures")
{
    const auto r = regimes();
    CHECK(r[0].regime == Regime::general);
    CHECK(r[1].regime == Regime::simple);
    CHECK(r[2].regime == Regime::equal);
    CHECK(r[3].regime == Regime::uncorrelated);
}

TEST_CASE("link budget")
{
    LinkBudget b;
    CHECK(b.l_f() == doctest::Approx(10.0 * std::pow(20.0, -2.1)));
    CHECK(b.l_u() == doctest::Approx(10.0 * std::pow(40.0, -2.1)));
    b.r0_bps_hz = 0.0;
    CHECK(gain_threshold(b) == 0.0);
    const auto b1 = with_gain(1.0);
    CHECK(gain_threshold(b1) == doctest::Approx(std::pow(2.0, 0.1) - 1.0).epsilon(1e-14));
    CHECK(gain_threshold(b1) == doctest::Approx(0.0717734625362931).epsilon(1e-12));
    CHECK(gain_threshold(LinkBudget().at_snr_db(10)) > gain_threshold(LinkBudget().at_snr_db(20)));
    LinkBudget bad;
    bad.d_f_m = -1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("exact outage")
{
    const auto unc = regimes()[3];
    LinkBudget b;
    b.r0_bps_hz = 0.0;
    CHECK(outage_exact(unc, b) == 0.0);
    // R~ = 1: 1 - (2 / Gamma(25)) K25(2)
    const auto b1 = with_gain(std::pow(2.0, 0.1) - 1.0);
    CHECK(outage_exact(unc, b1) == doctest::Approx(0.0407744320000228414724).epsilon(1e-12));
}

TEST_CASE("outage monotone in snr and target rate")
{
    for (const auto &m : regimes()) {
        LinkBudget b;
        double prev = 2.0;
        for (double db = 0.0; db <= 120.0; db += 2.5) {
            const double p = outage_exact(m, b.at_snr_db(db));
            CHECK(p <= prev);
            prev = p;
        }
        prev = -1.0;
        for (double r0 = 0.0; r0 <= 4.0; r0 += 0.25) {
            LinkBudget br = b.at_snr_db(60);
            br.r0_bps_hz = r0;
            const double p = outage_exact(m, br);
            CHECK(p >= prev);
            prev = p;
        }
    }
}

TEST_CASE("asymptotic closed forms")
{
    const auto r = regimes();
    LinkBudget b = LinkBudget().at_snr_db(50);
    const double num = std::pow(2.0, 0.1) - 1.0, lflu = b.l_f() * b.l_u(), g = b.gamma_bar();
    CHECK(outage_asymptotic(r[3], b).asymptotic == doctest::Approx(num / (24.0 * lflu * g)).epsilon(1e-14));
    CHECK(outage_asymptotic(r[2], b).asymptotic == doctest::Approx(num / (3.0 * 2.0 * lflu * g)).epsilon(1e-14));
    CHECK_THROWS_AS(outage_asymptotic(coefficients(spectrum({{2.0, 1}}, 3)), b), UnsupportedRegimeError);
    CHECK_THROWS_AS(outage_asymptotic(coefficients(spectrum({{1.0, 1}})), b), UnsupportedRegimeError);
}

TEST_CASE("first-order log coefficient vanishes for rank >= 2")
{
    for (const auto &m : regimes())
        if (m.rank >= 2)
            CHECK(std::abs(asymptotic_coefficients(m).s1) < 1e-12);
}

TEST_CASE("exact / asymptotic ratio at the high-snr point")
{
    for (const auto &m : regimes()) {
        double tr = 0.0;
        for (const auto &g : m.groups)
            tr += g.lambda * g.multiplicity;
        LinkBudget b;
        const double gbar = 1e14 * (std::pow(2.0, 0.1) - 1.0) / (b.l_f() * b.l_u() * tr);
        const auto o = outage_asymptotic(m, b.at_gamma_bar(gbar));
        CHECK(o.exact / o.asymptotic == doctest::Approx(1.0).epsilon(0.03));
    }
}

TEST_CASE("diversity slope")
{
    std::vector<double> grid;
    for (double e = 6.0; e <= 10.0; e += 0.5)
        grid.push_back(std::pow(10.0, e));
    const auto r = regimes();
    LinkBudget b;
    for (int k : {2, 3}) {
        const double s = diversity_slope(r[k], b, grid);
        CHECK(s >= 0.99);
        CHECK(s <= 1.01);
    }
    for (int k : {0, 1}) {
        const double s = diversity_slope(r[k], b, grid);
        CHECK(s >= 0.90);
        CHECK(s <= 1.00 + 1e-9);
    }
    for (const auto &m : r)
        CHECK(diversity_slope(m, b, grid) <= 1.05);
    CHECK_THROWS(diversity_slope(r[0], b, {1e6, 1e7}));
}

TEST_CASE("Mellin-Barnes kernel against arbitrary-precision values")
{
    // mpmath meijerg([[1-k,0,1,1],[]],[[1],[0]],x) / Gamma(k)
    CHECK(meijer_g_log_moment(1, 1.0) == doctest::Approx(0.512358377698222660345).epsilon(1e-12));
    CHECK(meijer_g_log_moment(3, 0.5) == doctest::Approx(0.731369487234028015710).epsilon(1e-12));
    CHECK(meijer_g_log_moment(2, 100.0) == doctest::Approx(4.49605070377979790792).epsilon(1e-12));
    CHECK(meijer_g_log_moment(25, 1000.0) == doctest::Approx(9.52971912082341118498).epsilon(1e-12));
    CHECK_THROWS_AS(meijer_g_log_moment(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(meijer_g_log_moment(1, 0.0), std::domain_error);
}

TEST_CASE("ergodic capacity: quadrature against contour")
{
    for (const auto &m : regimes())
        for (double db : {-20.0, 10.0, 40.0, 70.0, 100.0}) {
            const auto b = LinkBudget().at_snr_db(db);
            const double q = ergodic_capacity(m, b).value, c = ergodic_capacity_contour(m, b).value;
            CHECK(std::abs(q - c) <= 1e-6 * std::abs(c));
        }
    const auto one = coefficients(spectrum({{1.0, 1}}));
    CHECK(ergodic_capacity(one, with_gain(1.0)).value ==
          doctest::Approx(0.512358377698222660345 / std::numbers::ln2).epsilon(1e-9));
    CHECK(ergodic_capacity(one, with_gain(1e-12)).value < 1e-11);
}

TEST_CASE("ergodic capacity shape")
{
    for (const auto &m : regimes()) {
        double tr = 0.0;
        for (const auto &g : m.groups)
            tr += g.lambda * g.multiplicity;
        std::vector<double> gam, ec;
        for (double db = 0.0; db <= 90.0; db += 10.0) {
            const auto b = LinkBudget().at_snr_db(db);
            gam.push_back(b.gamma_bar());
            ec.push_back(ergodic_capacity(m, b).value);
            CHECK(ec.back() <= std::log2(1.0 + b.effective_gain() * tr));
        }
        for (std::size_t i = 1; i < ec.size(); ++i)
            CHECK(ec[i] > ec[i - 1]);
        for (std::size_t i = 2; i < ec.size(); ++i) {
            const double s1 = (ec[i - 1] - ec[i - 2]) / (gam[i - 1] - gam[i - 2]);
            const double s2 = (ec[i] - ec[i - 1]) / (gam[i] - gam[i - 1]);
            CHECK(s2 <= s1 * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("median")
{
    const auto one = coefficients(spectrum({{1.0, 1}}));
    CHECK(cdf_g0(one, mixture_median(one)) == doctest::Approx(0.5).epsilon(1e-10));
}
