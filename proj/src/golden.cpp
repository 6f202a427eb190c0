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

#include "fris/golden.hpp"
#include "fris/errors.hpp"
#include "fris/metrics.hpp"
#include "fris/mixture.hpp"
#include "fris/specfun.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace fris {

namespace {

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::map<std::string, std::string> parse_params(const std::string &p)
{
    std::map<std::string, std::string> kv;
    for (const auto &item : split(p, ';')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("golden: malformed parameter '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

const std::string &need(const std::map<std::string, std::string> &kv, const std::string &k)
{
    auto it = kv.find(k);
    if (it == kv.end())
        throw ConfigError("golden: missing parameter '" + k + "'");
    return it->second;
}

// "3:2|1:1" -> groups
SpectralModel parse_spectrum(const std::string &s)
{
    SpectralModel sp;
    for (const auto &g : split(s, '|')) {
        const auto c = g.find(':');
        if (c == std::string::npos)
            throw ConfigError("golden: malformed spectrum '" + s + "'");
        SpectralGroup gr{std::stod(g.substr(0, c)), std::stoi(g.substr(c + 1))};
        sp.groups.push_back(gr);
        sp.rank += gr.multiplicity;
        sp.trace_c += gr.lambda * gr.multiplicity;
    }
    sp.dimension = sp.rank;
    return sp;
}

// Natural log of |v| and its sign, for decimal text beyond double range.
void decimal_log(const std::string &text, double &log_abs, int &sign)
{
    const auto e = text.find_first_of("eE");
    const double mant = std::stod(text.substr(0, e));
    const long ex = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
    sign = mant < 0 ? -1 : (mant > 0 ? 1 : 0);
    log_abs = std::log(std::abs(mant)) + ex * std::numbers::ln10;
}

} // namespace

double golden_tolerance(const std::string &function)
{
    if (function == "meijer_g")
        return 1e-8;
    if (function == "mixture_cdf")
        return 1e-9;
    return 1e-10;
}

std::vector<GoldenRow> read_golden_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("golden: cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("golden: empty file " + path);
    if (line.rfind("function,params,argument,value", 0) != 0)
        throw ConfigError("golden: unexpected header in " + path);
    std::vector<GoldenRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        const auto f = split(line, ',');
        if (f.size() != 6)
            throw ConfigError("golden: " + path + ":" + std::to_string(lineno) + ": expected 6 fields");
        rows.push_back({f[0], f[1], f[2], f[3], std::stoi(f[4]), f[5]});
    }
    return rows;
}

std::vector<GoldenOutcome> golden_check(const std::vector<GoldenRow> &rows)
{
    std::vector<GoldenOutcome> out;
    for (const auto &row : rows) {
        GoldenOutcome o;
        o.row = row;
        o.tolerance = golden_tolerance(row.function);
        try {
            const auto kv = parse_params(row.params);
            const double x = row.argument.empty() ? 0.0 : std::stod(row.argument);
            double ref_log = 0.0;
            int ref_sign = 0;
            decimal_log(row.value, ref_log, ref_sign);

            bool compare_logs = false;
            double ours = 0.0, ours_log = 0.0;
            int ours_sign = 1;
            const std::string &fn = row.function;
            if (fn == "bessel_j0") {
                ours = specfun::bessel_j0(x);
            } else if (fn == "bessel_k") {
                const auto k = specfun::bessel_k(std::stoi(need(kv, "nu")), x);
                compare_logs = true;
                ours_log = k.log();
            } else if (fn == "ln_gamma") {
                ours = specfun::ln_gamma(x);
            } else if (fn == "gamma") {
                compare_logs = true;
                ours_log = specfun::ln_gamma(x);
            } else if (fn == "coefficient") {
                const auto sp = parse_spectrum(need(kv, "spectrum"));
                const auto m = coefficients_general(sp);
                const std::size_t i = std::stoul(need(kv, "i"));
                const int k = std::stoi(need(kv, "k"));
                if (i < 1 || i > sp.groups.size())
                    throw ConfigError("golden: group index out of range");
                bool found = false;
                for (const auto &t : m.terms)
                    if (t.lambda == sp.groups[i - 1].lambda && t.k == k) {
                        ours = t.c;
                        found = true;
                    }
                if (!found)
                    throw ConfigError("golden: no term for i=" + std::to_string(i) + ", k=" + std::to_string(k));
            } else if (fn == "meijer_g") {
                const int k = std::stoi(need(kv, "k"));
                compare_logs = true;
                ours_log = std::log(meijer_g_log_moment(k, x)) + specfun::ln_gamma(k);
            } else if (fn == "mixture_cdf") {
                const auto m = coefficients(parse_spectrum(need(kv, "spectrum")));
                ours = cdf_g0(m, x);
            } else {
                throw ConfigError("golden: unknown function '" + fn + "'");
            }

            if (compare_logs) {
                o.computed = ours_log;
                // |exp(d) - 1| for the log difference d
                o.rel_error = ours_sign == ref_sign ? std::abs(std::expm1(ours_log - ref_log)) : 1.0;
            } else {
                o.computed = ours;
                const double ref = std::stod(row.value);
                o.rel_error = ref == 0.0 ? std::abs(ours) : std::abs(ours - ref) / std::abs(ref);
                if (ref == 0.0)
                    o.note = "absolute";
            }
            o.passed = o.rel_error <= o.tolerance;
        } catch (const std::exception &e) {
            o.passed = false;
            o.note = e.what();
        }
        out.push_back(o);
    }
    return out;
}

} // namespace fris
