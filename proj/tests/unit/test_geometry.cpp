// SPDX-License-Identifier: Apache-2.0
#include "fris/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace fris;

TEST_CASE("positions")
{
    const UpaGeometry g(20, 20, 0.15, 0.125);
    CHECK(position(g, 0, 0) == std::array<double, 2>{0.0, 0.0});
    CHECK(position(g, 1, 0)[0] == doctest::Approx(0.01875));
    CHECK(position(g, 1, 0)[1] == 0.0);
    CHECK(position(g, 3, 4)[0] == doctest::Approx(0.05625));
    CHECK(position(g, 3, 4)[1] == doctest::Approx(0.075));
    CHECK_THROWS_AS(position(g, 20, 0), std::domain_error);
}

TEST_CASE("distances")
{
    const UpaGeometry g(20, 20, 0.15, 0.125);
    CHECK(distance(g, linearize(g, 0, 0), linearize(g, 1, 0)) == doctest::Approx(0.01875));
    CHECK(distance(g, linearize(g, 0, 0), linearize(g, 1, 1)) == doctest::Approx(0.01875 * std::sqrt(2.0)));
    CHECK(distance(g, 7, 7) == 0.0);
}

TEST_CASE("linear index")
{
    const UpaGeometry g(20, 20, 0.15, 0.125);
    CHECK(linearize(g, 0, 0) == 1);
    CHECK(linearize(g, 5, 2) == 46);
    CHECK(delinearize(g, 46) == GridPos{5, 2});
    CHECK_THROWS_AS(delinearize(g, 0), std::domain_error);
    CHECK_THROWS_AS(delinearize(g, 401), std::domain_error);
    CHECK_THROWS_AS(linearize(g, -1, 0), std::domain_error);
}

TEST_CASE("linear index round trip over the grid")
{
    const UpaGeometry g(7, 5, 0.5, 1.0);
    for (int j = 0; j < g.m_z; ++j)
        for (int i = 0; i < g.m_x; ++i) {
            const int m = linearize(g, i, j);
            CHECK(m >= 1);
            CHECK(m <= g.size());
            CHECK(delinearize(g, m) == GridPos{i, j});
        }
}

TEST_CASE("distance is a metric")
{
    const UpaGeometry g(20, 20, 0.15, 0.125);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(1, g.size());
    for (int n = 0; n < 500; ++n) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(distance(g, a, b) == distance(g, b, a));
        CHECK((distance(g, a, b) == 0.0) == (a == b));
        CHECK(distance(g, a, c) <= distance(g, a, b) + distance(g, b, c) + 1e-15);
    }
}

TEST_CASE("invalid geometry")
{
    CHECK_THROWS_AS(UpaGeometry(0, 5, 0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(UpaGeometry(5, 5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(UpaGeometry(5, 5, 0.1, -1.0), std::domain_error);
}
