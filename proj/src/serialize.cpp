// SPDX-License-Identifier: Apache-2.0
//
// fris-stats: exact cascaded-channel statistics for fluid and conventional RIS
// Copyright (C) 2026 The fris-stats authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fris/serialize.hpp"
#include "fris/errors.hpp"

namespace fris {

using nlohmann::json;

json to_json(const SpectralModel &s)
{
    json g = json::array();
    for (const auto &gr : s.groups)
        g.push_back({{"lambda", gr.lambda}, {"multiplicity", gr.multiplicity}});
    return {{"groups", g},           {"rank", s.rank},
            {"dimension", s.dimension}, {"trace_c", s.trace_c},
            {"cluster_tol", s.cluster_tol}, {"rank_tol", s.rank_tol},
            {"dropped_fraction", s.dropped_fraction}};
}

json to_json(const MixtureModel &m)
{
    json t = json::array();
    for (const auto &term : m.terms)
        t.push_back({{"lambda", term.lambda}, {"k", term.k}, {"c", term.c}});
    json g = json::array();
    for (const auto &gr : m.groups)
        g.push_back({{"lambda", gr.lambda}, {"multiplicity", gr.multiplicity}});
    json out = {{"regime", regime_name(m.regime)},
                {"condition_estimate", m.condition_estimate},
                {"dimension", m.dimension},
                {"rank", m.rank},
                {"groups", g},
                {"terms", t}};
    if (!m.warning.empty())
        out["warning"] = m.warning;
    return out;
}

json to_json(const ActiveSet &a)
{
    return {{"indices", a.indices}, {"stride_used", a.stride_used}, {"tau_used", a.tau_used}, {"max_corr", a.max_corr}};
}

SpectralModel spectral_from_json(const json &j)
{
    try {
        SpectralModel s;
        for (const auto &g : j.at("groups"))
            s.groups.push_back({g.at("lambda").get<double>(), g.at("multiplicity").get<int>()});
        s.rank = j.at("rank").get<int>();
        s.dimension = j.value("dimension", s.rank);
        s.trace_c = j.at("trace_c").get<double>();
        s.cluster_tol = j.value("cluster_tol", kDefaultClusterTol);
        s.rank_tol = j.value("rank_tol", kDefaultRankTol);
        s.dropped_fraction = j.value("dropped_fraction", 0.0);
        s.validate();
        return s;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("spectral model json: ") + e.what());
    }
}

MixtureModel mixture_from_json(const json &j)
{
    try {
        MixtureModel m;
        m.regime = regime_from_name(j.at("regime").get<std::string>());
        m.condition_estimate = j.value("condition_estimate", 1.0);
        m.dimension = j.value("dimension", 0);
        m.rank = j.value("rank", 0);
        if (j.contains("groups"))
            for (const auto &g : j.at("groups"))
                m.groups.push_back({g.at("lambda").get<double>(), g.at("multiplicity").get<int>()});
        for (const auto &t : j.at("terms"))
            m.terms.push_back({t.at("lambda").get<double>(), t.at("k").get<int>(), t.at("c").get<double>()});
        m.warning = j.value("warning", std::string());
        return m;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("mixture model json: ") + e.what());
    }
}

} // namespace fris
