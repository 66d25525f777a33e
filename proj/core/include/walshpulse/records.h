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

#ifndef WALSHPULSE_RECORDS_H
#define WALSHPULSE_RECORDS_H

#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace walshpulse {

struct ExperimentRecord {
    std::string experiment;
    int n_qubits = 0;
    double alpha = 0;
    int trotter_order = 1;
    double tau_over_n = 0;
    std::uint64_t seed = 0;
    std::string metric;
    double value = 0;

    bool operator==(const ExperimentRecord &) const = default;
};

/// Orders by every column except the value.
bool record_less(const ExperimentRecord &a, const ExperimentRecord &b);

inline constexpr const char *kCsvHeader = "experiment,N,alpha,p,tau_over_n,seed,metric,value";

/// Shortest decimal that round-trips; "nan", "inf" and "-inf" otherwise.
std::string format_double(double v);

void write_csv(std::ostream &out, const std::vector<ExperimentRecord> &records);

/// Calls fn(i) for i in [0, count) on up to `workers` threads. The first
/// exception is rethrown after all threads finish.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)> &fn);

/// Worker count from WALSHC_WORKERS, else the hardware concurrency.
int default_workers();

}  // namespace walshpulse

#endif
