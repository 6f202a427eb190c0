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
#include "fris/mixture.hpp"
#include "fris/selection.hpp"

#include <json.hpp>

namespace fris {

nlohmann::json to_json(const SpectralModel &s);
nlohmann::json to_json(const MixtureModel &m);
nlohmann::json to_json(const ActiveSet &a);

SpectralModel spectral_from_json(const nlohmann::json &j);
MixtureModel mixture_from_json(const nlohmann::json &j);

} // namespace fris
