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

#pragma once

#include "fris/channel.hpp"
#include "fris/geometry.hpp"
#include "fris/metrics.hpp"
#include "fris/mixture.hpp"
#include "fris/montecarlo.hpp"
#include "fris/selection.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fris {

struct Scenario {
    std::string name = "scenario";
    UpaGeometry geometry;
    SelectionPolicy selection;
    LinkBudget budget;
    std::uint64_t phase_seed = 1;
    double cluster_tol = kDefaultClusterTol;
    double rank_tol = kDefaultRankTol;
    McConfig mc;
    double snr_db_lo = 0.0;
    double snr_db_hi = 90.0;
    double snr_db_step = 5.0;
    std::size_t pdf_points = 400;
    std::size_t histogram_bins = 100;
    std::string out_dir = "out";

    void validate() const;
    std::vector<double> snr_grid_db() const;
};

// Field-checked parse; unknown keys and bad values raise ConfigError naming
// the offending key.
Scenario scenario_from_json(const nlohmann::json &j);
nlohmann::json scenario_to_json(const Scenario &s);

// .toml or .json, by extension.
Scenario load_scenario(const std::string &path);

// "lo:hi:step"
void apply_snr_range(Scenario &s, const std::string &range);

// Everything computed for one scenario.
struct ScenarioResult {
    Scenario scenario;
    ActiveSet active;
    CorrelationModel correlation;
    PhaseConfig phases;
    Coupling coupling;
    SpectralModel spectral;
    MixtureModel mixture;
    std::vector<double> samples; // empty when trials = 0
    std::optional<DistributionReport> distribution;
    std::vector<MetricsRow> metrics;
    double runtime_s = 0.0;
};

ScenarioResult evaluate_scenario(const Scenario &s);

// Writes the artifact files under s.out_dir; returns the written paths.
std::vector<std::string> write_outputs(const ScenarioResult &r);

nlohmann::json provenance(const ScenarioResult &r);

// Aligned comparison table. Throws ConfigError on mismatched SNR grids or
// fewer than two scenarios.
std::string compare_csv(const std::vector<ScenarioResult> &results);

} // namespace fris
