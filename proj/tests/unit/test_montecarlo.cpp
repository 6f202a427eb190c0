// SPDX-License-Identifier: Apache-2.0
#include "fris/errors.hpp"
#include "fris/montecarlo.hpp"
#include "fris/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace fris;

namespace {
MixtureModel flat(double lambda, int n)
{
    SpectralModel s;
    s.groups = {{lambda, n}};
    s.rank = s.dimension = n;
    s.trace_c = lambda * n;
    return coefficients(s);
}

McConfig small(std::uint64_t trials, std::uint64_t seed = 7)
{
    McConfig mc;
    mc.trials = trials;
    mc.seed = seed;
    mc.batch = 1024;
    mc.threads = 1;
    return mc;
}
} // namespace

TEST_CASE("Philox4x64-10 known answers")
{
    const auto z = Philox4x64::generate({0, 0, 0, 0}, {0, 0});
    CHECK(z[0] == 0x16554d9eca36314cULL);
    CHECK(z[1] == 0xdb20fe9d672d0fdcULL);
    CHECK(z[2] == 0xd7e772cee186176bULL);
    CHECK(z[3] == 0x7e68b68aec7ba23bULL);
    const std::uint64_t f = ~0ULL;
    const auto o = Philox4x64::generate({f, f, f, f}, {f, f});
    CHECK(o[0] == 0x87b092c3013fe90bULL);
    CHECK(o[1] == 0x438c3c67be8d0224ULL);
    CHECK(o[2] == 0x9cc7d7c69cd777b6ULL);
    CHECK(o[3] == 0xa09caebf594f0ba0ULL);
}

TEST_CASE("unit conversion stays open")
{
    CHECK(to_unit_open(0) > 0.0);
    CHECK(to_unit_open(~0ULL) < 1.0);
}

TEST_CASE("complex normal has unit power")
{
    CounterStream s(11, kStreamChannel, 0);
    double p = 0.0, mr = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double re, im;
        s.complex_normal(re, im);
        p += re * re + im * im;
        mr += re;
    }
    CHECK(p / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(mr / n) < 0.01);
}

TEST_CASE("zero coupling gives zero gain")
{
    const auto g = simulate_g0(CMatrix(3, 3), small(100));
    for (double v : g)
        CHECK(v == 0.0);
}

TEST_CASE("single element has unit mean gain")
{
    const auto g = simulate_g0(CMatrix::identity(1), small(200000));
    CHECK(pairwise_sum(g.data(), g.size()) / g.size() == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("results independent of batch and thread count")
{
    CMatrix a = CMatrix::identity(5);
    a(0, 1) = {0.3, -0.2};
    a(1, 0) = {0.3, 0.2};
    const auto ref = simulate_g0(a, small(5000));
    for (std::size_t batch : {4, 12, 64, 4096})
        for (unsigned threads : {1u, 2u, 3u}) {
            auto mc = small(5000);
            mc.batch = batch;
            mc.threads = threads;
            CHECK(simulate_g0(a, mc) == ref);
        }
    for (std::uint64_t t : {0ULL, 17ULL, 4999ULL})
        CHECK(draw_g0(a, 7, t) == ref[t]);
    CHECK(simulate_g0(a, small(5000, 8)) != ref);
}

TEST_CASE("config validation")
{
    auto mc = small(10);
    mc.batch = 6;
    CHECK_THROWS_AS(mc.validate(), ConfigError);
}

TEST_CASE("pairwise sum")
{
    std::vector<double> x(100001, 0.1);
    CHECK(pairwise_sum(x.data(), x.size()) == doctest::Approx(10000.1).epsilon(1e-14));
    CHECK(pairwise_sum(nullptr, 0) == 0.0);
}

TEST_CASE("Wilson interval")
{
    const auto w = wilson_interval(50, 1000);
    CHECK(w.lo == doctest::Approx(0.0381302623927488).epsilon(1e-10));
    CHECK(w.hi == doctest::Approx(0.0653138202442508).epsilon(1e-10));
    const auto z = wilson_interval(0, 1000000);
    CHECK(z.lo == 0.0);
    CHECK(z.hi == doctest::Approx(1.0 - std::pow(0.05, 1e-6)).epsilon(1e-9));
    CHECK(wilson_interval(10, 10).hi == doctest::Approx(1.0));
    CHECK_THROWS(wilson_interval(11, 10));
}

TEST_CASE("uncorrelated samples match the mixture cdf")
{
    const int n = 4;
    const auto g = simulate_g0(CMatrix::identity(n), small(100000));
    const auto rep = validate_distribution(g, flat(1.0, n));
    CHECK(rep.ks < 1.63 / std::sqrt(100000.0));
    CHECK(std::abs(rep.mean_z) < 4.0);
    CHECK(rep.analytic_mean == doctest::Approx(n));
    CHECK(rep.analytic_variance == doctest::Approx(mixture_second_moment(flat(1.0, n)) - n * n));
    // negative control: doubled eigenvalues must be rejected
    CHECK(validate_distribution(g, flat(2.0, n)).ks > 0.05);
}

TEST_CASE("second moment")
{
    // one group lambda=1, k=1: E g^2 = 4
    CHECK(mixture_second_moment(flat(1.0, 1)) == doctest::Approx(4.0));
}

TEST_CASE("metrics rows")
{
    const auto m = flat(1.0, 3);
    const auto g = simulate_g0(CMatrix::identity(3), small(50000));
    LinkBudget b;
    const auto rows = validate_metrics(g, m, b, {0.0, 40.0, 80.0});
    REQUIRE(rows.size() == 3);
    for (const auto &r : rows) {
        CHECK(r.op_ci.lo <= r.op_ci.hi);
        CHECK(std::abs(r.ec_exact - r.ec_contour) <= 1e-6 * r.ec_exact);
        CHECK(r.ec_ci.lo <= r.ec_mc);
        CHECK(r.ec_mc <= r.ec_ci.hi);
    }
    CHECK(rows[0].op_mc >= rows[2].op_mc);
}

TEST_CASE("histogram density integrates to the captured fraction")
{
    const std::vector<double> x{0.1, 0.2, 0.3, 0.9, 2.0};
    const auto h = histogram_density(x, 0.0, 1.0, 10);
    double s = 0.0;
    for (double v : h)
        s += v * 0.1;
    CHECK(s == doctest::Approx(0.8));
}
