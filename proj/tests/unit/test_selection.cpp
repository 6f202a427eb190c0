// SPDX-License-Identifier: Apache-2.0
#include "fris/errors.hpp"
#include "fris/selection.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace fris;

namespace {
const UpaGeometry kV(20, 20, 0.15, 0.125);

SelectionPolicy fluid(int m_on, Relaxation r = Relaxation::additive, double step = 0.001)
{
    SelectionPolicy p;
    p.m_on = m_on;
    p.relaxation = r;
    p.relaxation_step = step;
    return p;
}

void check_set(const UpaGeometry &g, const ActiveSet &s, int m_on)
{
    REQUIRE(static_cast<int>(s.indices.size()) == m_on);
    CHECK(std::is_sorted(s.indices.begin(), s.indices.end()));
    CHECK(std::set<int>(s.indices.begin(), s.indices.end()).size() == s.indices.size());
    CHECK(s.indices.front() >= 1);
    CHECK(s.indices.back() <= g.size());
    CHECK(s.max_corr <= 1.0);
}
} // namespace

TEST_CASE("stencil maxima per stride")
{
    // mpmath values of max |J0(2 pi 0.15 s sqrt(p^2+q^2))| over the stencil
    CHECK(stencil_max_corr(kV, 1) == doctest::Approx(0.789962234125382).epsilon(1e-12));
    CHECK(stencil_max_corr(kV, 2) == doctest::Approx(0.401986469818723).epsilon(1e-12));
    CHECK(stencil_max_corr(kV, 3) == doctest::Approx(0.397242248270250).epsilon(1e-12));
    CHECK(stencil_max_corr(kV, 5) == doctest::Approx(0.281473274783734).epsilon(1e-12));
    CHECK(stencil_max_corr(kV, 6) == doctest::Approx(0.174388062886143).epsilon(1e-12));
}

TEST_CASE("stencil cap")
{
    CHECK_FALSE(stencil_cap_satisfied(kV, 1, 0.3));
    for (int s = 1; s <= 8; ++s)
        CHECK(stencil_cap_satisfied(kV, s, 0.999));
}

TEST_CASE("fluid selection, additive schedule")
{
    const auto s = select_fluid(kV, fluid(25));
    check_set(kV, s, 25);
    CHECK(s.stride_used == 3);
    CHECK(s.tau_used == doctest::Approx(0.398).epsilon(1e-12));
    CHECK(s.max_corr == doctest::Approx(0.397242248270250).epsilon(1e-10));
}

TEST_CASE("fluid selection, geometric schedule")
{
    const auto s = select_fluid(kV, fluid(25, Relaxation::geometric, 0.12));
    check_set(kV, s, 25);
    CHECK(s.stride_used == 2);
    CHECK(s.tau_used == doctest::Approx(0.3 * 1.12 * 1.12 * 1.12));
    CHECK(s.max_corr == doctest::Approx(0.401986469818723).epsilon(1e-10));
}

TEST_CASE("fluid set honours the cap at every stencil offset")
{
    for (auto pol : {fluid(25), fluid(36), fluid(25, Relaxation::geometric, 0.12), fluid(36, Relaxation::geometric, 0.12)}) {
        const auto s = select_fluid(kV, pol);
        check_set(kV, s, pol.m_on);
        for (int a : s.indices)
            for (int b : s.indices) {
                if (a == b)
                    continue;
                const auto pa = delinearize(kV, a), pb = delinearize(kV, b);
                const int di = std::abs(pa.i - pb.i), dj = std::abs(pa.j - pb.j);
                CHECK(di % s.stride_used == 0);
                CHECK(dj % s.stride_used == 0);
                const int p = std::max(di, dj) / s.stride_used, q = std::min(di, dj) / s.stride_used;
                for (const auto &[sp, sq] : pol.stencil)
                    if (sp == p && sq == q)
                        CHECK(std::abs(jakes_correlation(kV, a, b)) <= s.tau_used);
            }
    }
}

TEST_CASE("36 elements give a 6 x 6 strided block")
{
    const auto s = select_fluid(kV, fluid(36, Relaxation::geometric, 0.12));
    std::set<int> is, js;
    for (int m : s.indices) {
        is.insert(delinearize(kV, m).i);
        js.insert(delinearize(kV, m).j);
    }
    CHECK(is.size() == 6);
    CHECK(js.size() == 6);
    CHECK(s.stride_used > 1);
}

TEST_CASE("contiguous blocks")
{
    const auto r25 = select_contiguous(kV, 25);
    check_set(kV, r25, 25);
    CHECK(r25.stride_used == 1);
    CHECK(r25.max_corr == doctest::Approx(0.789962234125382).epsilon(1e-10));
    CHECK(delinearize(kV, r25.indices.front()) == GridPos{7, 7});
    CHECK(delinearize(kV, r25.indices.back()) == GridPos{11, 11});

    const auto r36 = select_contiguous(kV, 36);
    check_set(kV, r36, 36);
    CHECK(delinearize(kV, r36.indices.front()) == GridPos{7, 7});
    CHECK(delinearize(kV, r36.indices.back()) == GridPos{12, 12});

    const auto r1 = select_contiguous(kV, 1);
    CHECK(r1.indices.size() == 1);
    CHECK(r1.max_corr == 0.0);

    const auto r6 = select_contiguous(kV, 6); // nearest rectangle 3 x 2
    check_set(kV, r6, 6);
    CHECK_THROWS_AS(select_contiguous(UpaGeometry(4, 4, 0.15, 0.125), 17), ConfigError);
    CHECK_THROWS_AS(select_contiguous(UpaGeometry(4, 4, 0.15, 0.125), 7), ConfigError); // 7 x 1 does not fit
}

TEST_CASE("fluid correlation below contiguous")
{
    CHECK(select_fluid(kV, fluid(25)).max_corr < select_contiguous(kV, 25).max_corr);
}

TEST_CASE("singleton and infeasible requests")
{
    const auto s = select_fluid(kV, fluid(1));
    CHECK(s.indices.size() == 1);
    CHECK(s.max_corr == 0.0);
    CHECK_THROWS_AS(select_fluid(kV, fluid(401)), ConfigError);
    // every stride would need all 400 elements: only stride 1 fits, cap 0.79 < 1
    CHECK(select_fluid(kV, fluid(400)).stride_used == 1);
    // a dense wavelength-spaced grid whose only feasible stride never passes
    const UpaGeometry dense(4, 4, 0.01, 1.0);
    SelectionPolicy p = fluid(16);
    CHECK_THROWS_AS(select_fluid(dense, p), ConfigError);
}

TEST_CASE("selection is deterministic")
{
    const auto a = select_fluid(kV, fluid(25)), b = select_fluid(kV, fluid(25));
    CHECK(a.indices == b.indices);
    CHECK(a.tau_used == b.tau_used);
}

TEST_CASE("activation grid text")
{
    const auto s = select_contiguous(kV, 25);
    const auto txt = activation_grid(kV, s);
    CHECK(std::count(txt.begin(), txt.end(), '#') == 25);
    CHECK(std::count(txt.begin(), txt.end(), '\n') == 20);
}
