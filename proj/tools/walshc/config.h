// Copyright 2026 The Walshpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WALSHC_CONFIG_H
#define WALSHC_CONFIG_H

#include <optional>
#include <string>
#include <string_view>

#include "walshpulse/experiments.h"

namespace walshc {

/// Contents of an experiment config file:
///
///   {"experiment": "ising",
///    "grid": {"N": [8], "alpha": [3], "p": [1, 2], "tau_over_n": [...], "seed": [0]},
///    "robust": {"mode": "ra", "eps_ra": [...], "eps_fp": [...], "field_strength": [...]},
///    "cutoff": {"lambda": [0, 8]},
///    "surface7": {"geometry": "grid_2d", "n_states": 64},
///    "maxcut": {"graph": "g6", "k_steps": [4, 8], "k_tau": 0.5},
///    "bounds": {"kappa": 0.1},
///    "run": {"total_time": 0.785, "tol": 1e-12, "workers": 4},
///    "output": {"csv": "out.csv", "manifest": "out.json"}}
///
/// Every table and key is optional; unknown keys are rejected.
struct ConfigFile {
    std::optional<std::string> experiment;
    std::optional<std::string> csv_path;
    std::optional<std::string> manifest_path;
};

/// Overlays the document onto `config`. Throws walshpulse::ParseError.
ConfigFile apply_config_json(std::string_view text, walshpulse::ExperimentConfig &config);

/// The config in the same layout, for manifests.
std::string config_to_json(const walshpulse::ExperimentConfig &config);

}  // namespace walshc

#endif
