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

#include "fris/scenario.hpp"
#include "fris/errors.hpp"
#include "fris/serialize.hpp"
#include "fris/simd/kernels.hpp"

#include <toml.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace fris {

using nlohmann::json;

namespace {

json toml_to_json(const toml::node &n)
{
    if (auto t = n.as_table()) {
        json o = json::object();
        for (const auto &[k, v] : *t)
            o[std::string(k.str())] = toml_to_json(v);
        return o;
    }
    if (auto a = n.as_array()) {
        json o = json::array();
        for (const auto &v : *a)
            o.push_back(toml_to_json(v));
        return o;
    }
    if (auto v = n.as_integer())
        return v->get();
    if (auto v = n.as_floating_point())
        return v->get();
    if (auto v = n.as_boolean())
        return v->get();
    if (auto v = n.as_string())
        return v->get();
    throw ConfigError("config: unsupported TOML value type");
}

class Reader
{
  public:
    Reader(const json &j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object())
            throw ConfigError(path_.empty() ? "config: top level must be a table" : path_ + ": must be a table");
    }

    template <class T>
    void get(const char *key, T &dst)
    {
        seen_.insert(key);
        if (!j_.contains(key))
            return;
        const json &v = j_.at(key);
        try {
            if constexpr (std::is_same_v<T, double>) {
                if (!v.is_number())
                    throw ConfigError("");
                dst = v.get<double>();
            } else if constexpr (std::is_integral_v<T>) {
                if (!v.is_number_integer() || (std::is_unsigned_v<T> && v.get<long long>() < 0))
                    throw ConfigError("");
                dst = v.get<T>();
            } else {
                if (!v.is_string())
                    throw ConfigError("");
                dst = v.get<std::string>();
            }
        } catch (const std::exception &) {
            throw ConfigError("config: key '" + where(key) + "' has the wrong type");
        }
    }

    Reader sub(const char *key)
    {
        seen_.insert(key);
        static const json empty = json::object();
        return Reader(j_.contains(key) ? j_.at(key) : empty, where(key));
    }

    void finish() const
    {
        for (const auto &[k, v] : j_.items())
            if (!seen_.count(k))
                throw ConfigError("config: unknown key '" + where(k) + "'");
    }

    std::string where(const std::string &k) const { return path_.empty() ? k : path_ + "." + k; }

  private:
    const json &j_;
    std::string path_;
    std::set<std::string> seen_;
};

template <class F>
void checked(const std::string &key, F f)
{
    try {
        f();
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        throw ConfigError("config: invalid value for '" + key + "': " + e.what());
    }
}

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

void Scenario::validate() const
{
    checked("geometry", [&] { geometry.validate(); });
    selection.validate(geometry);
    budget.validate();
    mc.validate();
    if (!(cluster_tol >= 0.0) || !(rank_tol >= 0.0))
        throw ConfigError("config: invalid value for 'channel': tolerances must be >= 0");
    if (!(snr_db_step > 0.0) || snr_db_hi < snr_db_lo)
        throw ConfigError("config: invalid value for 'snr': need step > 0 and db_hi >= db_lo");
    if (pdf_points < 2 || histogram_bins < 1)
        throw ConfigError("config: invalid value for 'output': pdf_points >= 2, histogram_bins >= 1");
}

std::vector<double> Scenario::snr_grid_db() const
{
    std::vector<double> g;
    const long n = std::lround(std::floor((snr_db_hi - snr_db_lo) / snr_db_step + 1e-9));
    for (long k = 0; k <= n; ++k)
        g.push_back(snr_db_lo + k * snr_db_step);
    return g;
}

Scenario scenario_from_json(const json &j)
{
    Scenario s;
    Reader top(j, "");
    top.get("name", s.name);
    {
        auto r = top.sub("geometry");
        r.get("m_x", s.geometry.m_x);
        r.get("m_z", s.geometry.m_z);
        r.get("d_w", s.geometry.d_w);
        r.get("lambda_c_m", s.geometry.lambda_c);
        r.finish();
    }
    {
        auto r = top.sub("selection");
        std::string mode = "fluid";
        r.get("mode", mode);
        if (mode == "fluid")
            s.selection.mode = SelectionMode::fluid;
        else if (mode == "contiguous")
            s.selection.mode = SelectionMode::contiguous;
        else
            throw ConfigError("config: key 'selection.mode' must be \"fluid\" or \"contiguous\", got \"" + mode + "\"");
        r.get("m_on", s.selection.m_on);
        r.get("tau_init", s.selection.tau_init);
        r.get("relaxation_step", s.selection.relaxation_step);
        std::string relax = "additive";
        r.get("relaxation", relax);
        if (relax == "additive")
            s.selection.relaxation = Relaxation::additive;
        else if (relax == "geometric")
            s.selection.relaxation = Relaxation::geometric;
        else
            throw ConfigError("config: key 'selection.relaxation' must be \"additive\" or \"geometric\", got \"" +
                              relax + "\"");
        r.finish();
    }
    {
        auto r = top.sub("link");
        r.get("n0_w", s.budget.n0_w);
        r.get("rho_f", s.budget.rho_f);
        r.get("rho_u", s.budget.rho_u);
        r.get("d_f_m", s.budget.d_f_m);
        r.get("d_u_m", s.budget.d_u_m);
        r.get("alpha_f", s.budget.alpha_f);
        r.get("alpha_u", s.budget.alpha_u);
        r.get("r0_bps_hz", s.budget.r0_bps_hz);
        r.finish();
    }
    {
        auto r = top.sub("channel");
        r.get("phase_seed", s.phase_seed);
        r.get("cluster_tol", s.cluster_tol);
        r.get("rank_tol", s.rank_tol);
        r.finish();
    }
    {
        auto r = top.sub("mc");
        r.get("trials", s.mc.trials);
        r.get("seed", s.mc.seed);
        r.get("batch", s.mc.batch);
        r.get("threads", s.mc.threads);
        r.finish();
    }
    {
        auto r = top.sub("snr");
        r.get("db_lo", s.snr_db_lo);
        r.get("db_hi", s.snr_db_hi);
        r.get("db_step", s.snr_db_step);
        r.finish();
    }
    {
        auto r = top.sub("output");
        r.get("dir", s.out_dir);
        r.get("pdf_points", s.pdf_points);
        r.get("histogram_bins", s.histogram_bins);
        r.finish();
    }
    top.finish();
    s.validate();
    return s;
}

json scenario_to_json(const Scenario &s)
{
    return {
        {"name", s.name},
        {"geometry", {{"m_x", s.geometry.m_x}, {"m_z", s.geometry.m_z}, {"d_w", s.geometry.d_w},
                      {"lambda_c_m", s.geometry.lambda_c}}},
        {"selection", {{"mode", s.selection.mode == SelectionMode::fluid ? "fluid" : "contiguous"},
                       {"m_on", s.selection.m_on}, {"tau_init", s.selection.tau_init},
                       {"relaxation_step", s.selection.relaxation_step},
                       {"relaxation", s.selection.relaxation == Relaxation::geometric ? "geometric" : "additive"}}},
        {"link", {{"n0_w", s.budget.n0_w}, {"rho_f", s.budget.rho_f}, {"rho_u", s.budget.rho_u},
                  {"d_f_m", s.budget.d_f_m}, {"d_u_m", s.budget.d_u_m}, {"alpha_f", s.budget.alpha_f},
                  {"alpha_u", s.budget.alpha_u}, {"r0_bps_hz", s.budget.r0_bps_hz}}},
        {"channel", {{"phase_seed", s.phase_seed}, {"cluster_tol", s.cluster_tol}, {"rank_tol", s.rank_tol}}},
        {"mc", {{"trials", s.mc.trials}, {"seed", s.mc.seed}, {"batch", s.mc.batch}, {"threads", s.mc.threads}}},
        {"snr", {{"db_lo", s.snr_db_lo}, {"db_hi", s.snr_db_hi}, {"db_step", s.snr_db_step}}},
        {"output", {{"dir", s.out_dir}, {"pdf_points", s.pdf_points}, {"histogram_bins", s.histogram_bins}}},
    };
}

Scenario load_scenario(const std::string &path)
{
    const std::filesystem::path p(path);
    if (!std::filesystem::exists(p))
        throw ConfigError("config: file not found: " + path);
    json j;
    if (p.extension() == ".toml") {
        try {
            toml::table t = toml::parse_file(path);
            j = toml_to_json(t);
        } catch (const toml::parse_error &e) {
            std::ostringstream os;
            os << "config: " << path << ":" << e.source().begin.line << ": " << e.description();
            throw ConfigError(os.str());
        }
    } else {
        std::ifstream in(path);
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw ConfigError("config: " + path + ": " + e.what());
        }
    }
    return scenario_from_json(j);
}

void apply_snr_range(Scenario &s, const std::string &range)
{
    std::istringstream is(range);
    double lo, hi, step;
    char c1 = 0, c2 = 0;
    if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !is.eof())
        throw ConfigError("--snr-db-range: expected lo:hi:step, got '" + range + "'");
    s.snr_db_lo = lo;
    s.snr_db_hi = hi;
    s.snr_db_step = step;
    s.validate();
}

ScenarioResult evaluate_scenario(const Scenario &s)
{
    const auto t0 = std::chrono::steady_clock::now();
    s.validate();
    ScenarioResult r;
    r.scenario = s;
    r.active = select(s.geometry, s.selection);
    r.correlation = build_correlation(s.geometry, r.active);
    r.phases = PhaseConfig::sample(r.active.indices.size(), s.phase_seed);
    r.coupling = build_coupling(r.correlation, r.phases);
    r.spectral = spectral_group(r.coupling.c, s.cluster_tol, s.rank_tol);
    r.mixture = coefficients(r.spectral);
    if (s.mc.trials > 0) {
        r.samples = simulate_g0(r.coupling.a, s.mc);
        r.distribution = validate_distribution(r.samples, r.mixture);
    }
    r.metrics = validate_metrics(r.samples, r.mixture, s.budget, s.snr_grid_db());
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

json provenance(const ScenarioResult &r)
{
    json p = {
        {"scenario", scenario_to_json(r.scenario)},
        {"phase_seed", r.phases.seed},
        {"mc_seed", r.scenario.mc.seed},
        {"trials", r.scenario.mc.trials},
        {"tolerances", {{"cluster_tol", r.spectral.cluster_tol}, {"rank_tol", r.spectral.rank_tol}}},
        {"selection", to_json(r.active)},
        {"tau_used", r.active.tau_used},
        {"max_corr", r.active.max_corr},
        {"spectral", to_json(r.spectral)},
        {"mixture", to_json(r.mixture)},
        {"condition_estimate", r.mixture.condition_estimate},
        {"kernel", simd::active_kernel()},
    };
    if (r.distribution) {
        const auto &d = *r.distribution;
        p["mc_summary"] = {{"n", d.n},       {"mean", d.mean},         {"variance", d.variance},
                           {"analytic_mean", d.analytic_mean}, {"analytic_variance", d.analytic_variance},
                           {"mean_z", d.mean_z}, {"ks", d.ks}};
    }
    return p;
}

namespace {

double upper_quantile(const MixtureModel &m, double p)
{
    double hi = std::max(mixture_mean(m), 1e-300);
    while (cdf_g0(m, hi) < p)
        hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cdf_g0(m, mid) < p ? lo : hi) = mid;
    }
    return hi;
}

void write_file(const std::filesystem::path &p, const std::string &text, std::vector<std::string> &written)
{
    std::ofstream out(p);
    if (!out)
        throw ConfigError("cannot write " + p.string());
    out << text;
    written.push_back(p.string());
}

} // namespace

std::vector<std::string> write_outputs(const ScenarioResult &r)
{
    const auto &s = r.scenario;
    const std::filesystem::path dir(s.out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    const bool mc = !r.samples.empty();

    write_file(dir / (s.name + "_activation.txt"), activation_grid(s.geometry, r.active), written);
    write_file(dir / (s.name + "_activation.json"), to_json(r.active).dump(2) + "\n", written);

    {
        const double hi = upper_quantile(r.mixture, 0.999);
        const std::size_t n = s.pdf_points;
        std::vector<double> hist;
        if (mc)
            hist = histogram_density(r.samples, 0.0, hi, s.histogram_bins);
        std::ostringstream os;
        os << "g,pdf_exact,cdf_exact" << (mc ? ",mc_density" : "") << "\n";
        for (std::size_t k = 1; k <= n; ++k) {
            const double g = hi * k / n;
            os << fmt(g) << "," << fmt(pdf_g0(r.mixture, g)) << "," << fmt(cdf_g0(r.mixture, g));
            if (mc) {
                const std::size_t b = std::min(hist.size() - 1, static_cast<std::size_t>(g / hi * hist.size() - 1e-9));
                os << "," << fmt(hist[b]);
            }
            os << "\n";
        }
        write_file(dir / (s.name + "_pdf.csv"), os.str(), written);
    }
    if (mc) {
        std::ostringstream os;
        os << "bin_lo,bin_hi,mc_density\n";
        const double hi = upper_quantile(r.mixture, 0.999);
        const auto hist = histogram_density(r.samples, 0.0, hi, s.histogram_bins);
        for (std::size_t b = 0; b < hist.size(); ++b)
            os << fmt(hi * b / hist.size()) << "," << fmt(hi * (b + 1) / hist.size()) << "," << fmt(hist[b]) << "\n";
        write_file(dir / (s.name + "_histogram.csv"), os.str(), written);
    }
    {
        std::ostringstream os;
        os << "scenario,snr_db,op_exact,op_asymptotic";
        if (mc)
            os << ",op_mc,op_lo,op_hi,op_one_sided";
        os << ",ec_exact,ec_contour";
        if (mc)
            os << ",ec_mc,ec_lo,ec_hi";
        os << "\n";
        for (const auto &row : r.metrics) {
            os << s.name << "," << fmt(row.snr_db) << "," << fmt(row.op_exact) << "," << fmt(row.op_asymptotic);
            if (mc)
                os << "," << fmt(row.op_mc) << "," << fmt(row.op_ci.lo) << "," << fmt(row.op_ci.hi) << ","
                   << (row.op_one_sided ? 1 : 0);
            os << "," << fmt(row.ec_exact) << "," << fmt(row.ec_contour);
            if (mc)
                os << "," << fmt(row.ec_mc) << "," << fmt(row.ec_ci.lo) << "," << fmt(row.ec_ci.hi);
            os << "\n";
        }
        write_file(dir / (s.name + "_metrics.csv"), os.str(), written);
    }
    write_file(dir / (s.name + "_provenance.json"), provenance(r).dump(2) + "\n", written);
    return written;
}

std::string compare_csv(const std::vector<ScenarioResult> &results)
{
    if (results.size() < 2)
        throw ConfigError("compare: need at least two scenarios");
    const auto grid = results.front().scenario.snr_grid_db();
    for (const auto &r : results)
        if (r.scenario.snr_grid_db() != grid)
            throw ConfigError("compare: SNR grids of '" + results.front().scenario.name + "' and '" +
                              r.scenario.name + "' do not align");
    std::ostringstream os;
    os << "snr_db";
    for (const auto &r : results) {
        const auto &n = r.scenario.name;
        os << "," << n << "_op_exact," << n << "_op_asymptotic," << n << "_ec_exact";
        if (!r.samples.empty())
            os << "," << n << "_op_mc," << n << "_ec_mc";
    }
    os << "\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        os << fmt(grid[k]);
        for (const auto &r : results) {
            const auto &row = r.metrics[k];
            os << "," << fmt(row.op_exact) << "," << fmt(row.op_asymptotic) << "," << fmt(row.ec_exact);
            if (!r.samples.empty())
                os << "," << fmt(row.op_mc) << "," << fmt(row.ec_mc);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace fris
