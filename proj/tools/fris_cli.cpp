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

// fris: scenario runner.
//   fris run <config> [--trials N] [--seed N] [--out DIR] [--snr-db-range lo:hi:step]
//   fris compare <config> <config> ... [same flags] [--csv FILE]
//   fris golden-check <vectors.csv>
// Exit codes: 0 ok, 1 golden mismatch, 2 config error, 3 conditioning abort.

#include "fris/errors.hpp"
#include "fris/golden.hpp"
#include "fris/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Overrides {
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> snr;

    void attach(CLI::App *app)
    {
        app->add_option("--trials", trials, "Monte Carlo trials (0 = analytic only)");
        app->add_option("--seed", seed, "Monte Carlo seed");
        app->add_option("--out", out, "output directory");
        app->add_option("--snr-db-range", snr, "SNR grid lo:hi:step in dB");
    }

    fris::Scenario apply(fris::Scenario s) const
    {
        if (trials)
            s.mc.trials = *trials;
        if (seed)
            s.mc.seed = *seed;
        if (out)
            s.out_dir = *out;
        if (snr)
            fris::apply_snr_range(s, *snr);
        s.validate();
        return s;
    }
};

void summary(const fris::ScenarioResult &r)
{
    std::printf("%s: m_on=%zu stride=%d tau_used=%.3f max_corr=%.4f rank=%d groups=%zu regime=%s cond=%.3g",
                r.scenario.name.c_str(), r.active.indices.size(), r.active.stride_used, r.active.tau_used,
                r.active.max_corr, r.spectral.rank, r.spectral.groups.size(), fris::regime_name(r.mixture.regime),
                r.mixture.condition_estimate);
    if (r.distribution)
        std::printf(" ks=%.5f", r.distribution->ks);
    std::printf(" (%.1f s)\n", r.runtime_s);
    if (!r.mixture.warning.empty())
        std::fprintf(stderr, "warning: %s\n", r.mixture.warning.c_str());
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact cascaded-channel statistics for fluid and conventional RIS"};
    app.require_subcommand(1);

    Overrides run_ov, cmp_ov;
    std::string run_cfg;
    auto *run = app.add_subcommand("run", "evaluate one scenario and write its artifacts");
    run->add_option("config", run_cfg, "scenario file (.toml or .json)")->required();
    run_ov.attach(run);

    std::vector<std::string> cmp_cfgs;
    std::string cmp_csv;
    auto *cmp = app.add_subcommand("compare", "evaluate several scenarios on a shared SNR grid");
    cmp->add_option("configs", cmp_cfgs, "scenario files")->required();
    cmp->add_option("--csv", cmp_csv, "combined CSV path (default <out>/compare.csv)");
    cmp_ov.attach(cmp);

    std::string golden_path;
    auto *gold = app.add_subcommand("golden-check", "compare library values against a golden-vector CSV");
    gold->add_option("vectors", golden_path, "golden CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            const auto s = run_ov.apply(fris::load_scenario(run_cfg));
            const auto r = fris::evaluate_scenario(s);
            for (const auto &p : fris::write_outputs(r))
                std::printf("wrote %s\n", p.c_str());
            summary(r);
            return 0;
        }
        if (*cmp) {
            if (cmp_cfgs.size() < 2)
                throw fris::ConfigError("compare: need at least two scenarios");
            std::vector<fris::ScenarioResult> results;
            for (const auto &c : cmp_cfgs) {
                results.push_back(fris::evaluate_scenario(cmp_ov.apply(fris::load_scenario(c))));
                fris::write_outputs(results.back());
                summary(results.back());
            }
            const std::string csv = fris::compare_csv(results);
            const std::string path =
                cmp_csv.empty() ? (std::filesystem::path(results.front().scenario.out_dir) / "compare.csv").string()
                                : cmp_csv;
            std::ofstream(path) << csv;
            std::printf("wrote %s\n", path.c_str());
            return 0;
        }
        if (*gold) {
            const auto outcomes = fris::golden_check(fris::read_golden_csv(golden_path));
            int failed = 0;
            for (const auto &o : outcomes) {
                if (!o.passed) {
                    ++failed;
                    std::printf("FAIL %s(%s; %s) rel_err=%.3e tol=%.1e %s\n", o.row.function.c_str(),
                                o.row.params.c_str(), o.row.argument.c_str(), o.rel_error, o.tolerance,
                                o.note.c_str());
                }
            }
            std::printf("golden-check: %zu rows, %d failed\n", outcomes.size(), failed);
            return failed ? 1 : 0;
        }
    } catch (const fris::ConfigError &e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const fris::ConditioningError &e) {
        std::fprintf(stderr, "conditioning abort: %s\n", e.what());
        return 3;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
