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

#include <stdexcept>
#include <string>

namespace fris {

// Invalid scenario / selection configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical conditioning failure, e.g. trace drift after clustering (CLI exit code 3).
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All eigenvalues of C were dropped: the cascaded channel carries no energy.
class DegenerateChannelError : public ConditioningError {
public:
    using ConditioningError::ConditioningError;
};

// Requested asymptotic form does not exist for the spectral regime at hand.
class UnsupportedRegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Adaptive quadrature or contour integration missed its tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string &what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

} // namespace fris
