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

#include <string>
#include <vector>

namespace fris {

// One row of a golden-vector CSV:
//   function,params,argument,value,digits,method
struct GoldenRow {
    std::string function;
    std::string params; // key=value pairs separated by ';'
    std::string argument;
    std::string value;  // decimal text, may exceed double range
    int digits = 30;
    std::string method;
};

std::vector<GoldenRow> read_golden_csv(const std::string &path);

struct GoldenOutcome {
    GoldenRow row;
    double computed = 0.0;     // our value (or its log when flagged)
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

// Evaluates every row with the library and compares. Supported functions:
// bessel_j0, bessel_k, ln_gamma, gamma, coefficient, meijer_g, mixture_cdf.
std::vector<GoldenOutcome> golden_check(const std::vector<GoldenRow> &rows);

// Default relative tolerance per function family.
double golden_tolerance(const std::string &function);

} // namespace fris
