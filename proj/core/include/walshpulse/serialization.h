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

#ifndef WALSHPULSE_SERIALIZATION_H
#define WALSHPULSE_SERIALIZATION_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "walshpulse/resource.h"
#include "walshpulse/schedule.h"
#include "walshpulse/target.h"

namespace walshpulse {

inline constexpr int kScheduleFormatVersion = 1;

/// Malformed or semantically invalid input document.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Deterministic JSON; schedule_to_json(schedule_from_json(s)) == s for any s
/// produced by schedule_to_json.
std::string schedule_to_json(const PulseSchedule &schedule);
PulseSchedule schedule_from_json(std::string_view text);

/// {"n_qubits": N, "terms": [{"i", "j", "ops": [a, b], "strength"}]} where each
/// op is "X", "Y", "Z" or an [x, y, z] axis; or {"ising_chain": {"n_qubits", "j"}}.
TargetSpec target_from_json(std::string_view text);
std::string target_to_json(const TargetSpec &target);

/// {"n_qubits", "jx": [[..]], "jy": [[..]], "fields": [[hx, hy, hz], ..]} or
/// {"power_law": {"n_qubits" | "positions", "alpha", "j", "ising"}}.
ResourceHamiltonian resource_from_json(std::string_view text);
std::string resource_to_json(const ResourceHamiltonian &resource);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string content_hash(std::string_view bytes);

}  // namespace walshpulse

#endif
