// SPDX-License-Identifier: Apache-2.0
#include "fris/errors.hpp"
#include "fris/serialize.hpp"

#include <doctest.h>

using namespace fris;

namespace {
SpectralModel sample_spectrum()
{
    SpectralModel s;
    s.groups = {{3.25, 2}, {1.0 / 3.0, 1}, {0.125, 4}};
    s.rank = 7;
    s.dimension = 9;
    s.trace_c = 3.25 * 2 + 1.0 / 3.0 + 0.5;
    s.dropped_fraction = 1e-13;
    return s;
}
} // namespace

TEST_CASE("spectral model round trip is exact")
{
    const auto s = sample_spectrum();
    const auto j = to_json(s);
    const auto back = spectral_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.groups.size() == s.groups.size());
    for (std::size_t i = 0; i < s.groups.size(); ++i) {
        CHECK(back.groups[i].lambda == s.groups[i].lambda);
        CHECK(back.groups[i].multiplicity == s.groups[i].multiplicity);
    }
    CHECK(back.rank == s.rank);
    CHECK(back.dimension == s.dimension);
    CHECK(back.trace_c == s.trace_c);
    CHECK(back.dropped_fraction == s.dropped_fraction);
    CHECK(to_json(back) == j);
}

TEST_CASE("mixture model round trip is exact")
{
    const auto m = coefficients(sample_spectrum());
    const auto j = to_json(m);
    const auto back = mixture_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.regime == m.regime);
    REQUIRE(back.terms.size() == m.terms.size());
    for (std::size_t i = 0; i < m.terms.size(); ++i) {
        CHECK(back.terms[i].lambda == m.terms[i].lambda);
        CHECK(back.terms[i].k == m.terms[i].k);
        CHECK(back.terms[i].c == m.terms[i].c);
    }
    for (double g : {0.01, 1.0, 7.5})
        CHECK(cdf_g0(back, g) == cdf_g0(m, g));
    CHECK(to_json(back) == j);
}

TEST_CASE("active set json")
{
    ActiveSet a{{1, 5, 17}, 2, 0.42, 0.40};
    const auto j = to_json(a);
    CHECK(j.at("indices").get<std::vector<int>>() == a.indices);
    CHECK(j.at("stride_used").get<int>() == 2);
}

TEST_CASE("malformed model json")
{
    CHECK_THROWS_AS(spectral_from_json(nlohmann::json::parse(R"({"groups": []})")), ConfigError);
    CHECK_THROWS_AS(spectral_from_json(nlohmann::json::parse(R"({"groups": [{"lambda": -1, "multiplicity": 1}],
        "rank": 1, "trace_c": -1})")),
                    std::exception);
    CHECK_THROWS_AS(mixture_from_json(nlohmann::json::parse(R"({"regime": "weird", "terms": []})")), std::exception);
    CHECK_THROWS_AS(mixture_from_json(nlohmann::json::parse(R"({"regime": "simple"})")), ConfigError);
}
