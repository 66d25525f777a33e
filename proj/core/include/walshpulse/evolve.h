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

#ifndef WALSHPULSE_EVOLVE_H
#define WALSHPULSE_EVOLVE_H

#include <vector>

#include "walshpulse/pauli_operator.h"
#include "walshpulse/state_vector.h"

namespace walshpulse {

inline constexpr double kDefaultEvolveTolerance = 1e-12;

/// Applies exp(-i t H) by a truncated Taylor series on substeps with
/// ||H|| dt <= 1/2. `tol` bounds the total truncation error in 2-norm.
/// Reuses its scratch buffers across calls; not thread-safe per instance.
class Propagator {
   public:
    explicit Propagator(double tol = kDefaultEvolveTolerance);

    void apply(const PauliStringOperator &h, double t, StateVector &psi);
    double tolerance() const {
        return tol_;
    }

   private:
    double tol_;
    std::vector<Amplitude> term_;
    std::vector<Amplitude> next_;
};

StateVector evolve(const PauliStringOperator &h, double t, StateVector psi, double tol = kDefaultEvolveTolerance);

}  // namespace walshpulse

#endif
