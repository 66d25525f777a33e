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

#ifndef WALSHPULSE_EXPERIMENTS_H
#define WALSHPULSE_EXPERIMENTS_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "walshpulse/records.h"

namespace walshpulse {

/// Parameter grid shared by all experiments. Every experiment sweeps the
/// Cartesian product of the lists it uses; J = 1 throughout, so tau_over_n is
/// J tau / n.
struct ExperimentConfig {
    std::vector<int> n_values;
    std::vector<double> alphas;
    std::vector<int> orders;
    std::vector<double> tau_over_n;
    std::vector<std::uint64_t> seeds;

    /// robust: "ra" (rotation-angle errors), "fp" (finite pulses) or "fields".
    std::string mode = "ra";
    std::vector<double> eps_ra;
    std::vector<double> eps_fp;
    /// Largest background-field norm, in units of J.
    std::vector<double> field_strength;

    /// cutoff: lambda_r values; 0 runs without cutoff.
    std::vector<int> lambdas;

    /// surface7: "grid_2d" or "chain_1d".
    std::string geometry = "grid_2d";
    int n_states = 64;

    /// maxcut: registry graph, annealing step counts and fixed K tau.
    std::string graph = "g6";
    std::vector<int> k_steps;
    double k_tau = 0.5;

    /// bounds: period-selection constant.
    double kappa = 0.1;

    /// Target evolution time; 0 picks the experiment default (pi / 4).
    double total_time = 0;
    /// Evolution tolerance per exponential.
    double tol = 1e-12;
    int workers = 1;
};

struct ExperimentFailure {
    std::string row;
    std::string message;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    /// Label -> content hash of every compiled schedule.
    std::map<std::string, std::string> schedule_hashes;
    std::vector<ExperimentFailure> failures;
};

std::vector<std::string> experiment_names();

/// The grid each experiment runs when nothing is overridden.
ExperimentConfig default_config(std::string_view name);

/// Throws std::invalid_argument for unknown names or empty grids.
void validate_config(std::string_view name, const ExperimentConfig &config);

/// Runs every grid row; a failing row is recorded (metric "error", value NaN)
/// and the sweep continues. Records come back sorted.
ExperimentResult run_experiment(std::string_view name, const ExperimentConfig &config);

}  // namespace walshpulse

#endif
