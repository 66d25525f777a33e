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

#ifndef WALSHPULSE_BOUNDS_H
#define WALSHPULSE_BOUNDS_H

#include <span>

namespace walshpulse {

enum class BoundRegime { AlphaGreaterThanOne, AlphaLessThanOne };

struct TrotterBoundReport {
    double alpha = 0;
    int n_qubits = 0;
    double j = 1;
    double total_tau = 0;
    double total_time = 0;
    /// a_alpha or b_alpha, whichever the regime uses.
    double constant = 0;
    double bound = 0;
    BoundRegime regime = BoundRegime::AlphaGreaterThanOne;
};

/// 2 (alpha / (alpha - 1))^2, for alpha > 1.
double a_alpha(double alpha);
/// 2 / ((1 - alpha)^2 (2 - alpha)), for alpha < 1.
double b_alpha(double alpha);

/// Unitary Trotter-error bound for power-law resources. Both times are
/// physical: total_tau is the cycle period sum_q tau_q and total_time the
/// run length. alpha = 1 is rejected.
TrotterBoundReport trotter_bound(double alpha, int n_qubits, double j, std::span<const double> taus, double total_time);

/// Cycle period sum_q tau_q that keeps the bound at a chosen kappa:
/// J sum tau = kappa / (N J T) for alpha > 1, kappa N^(2 alpha - 3) / (J T) below.
double period_for_kappa(double alpha, int n_qubits, double j, double total_time, double kappa);

}  // namespace walshpulse

#endif
