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

#include "walshpulse/evolve.h"

#include <cmath>
#include <stdexcept>

#include "walshpulse/errors.h"

namespace walshpulse {

namespace {

constexpr int kMaxTerms = 60;

double norm2(const std::vector<Amplitude> &v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

}  // namespace

Propagator::Propagator(double tol) : tol_(tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("evolution tolerance must be positive");
    }
}

void Propagator::apply(const PauliStringOperator &h, double t, StateVector &psi) {
    if (h.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("operator and state qubit counts differ");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("non-finite evolution time");
    }
    double bound = h.norm_bound();
    if (t == 0 || bound == 0) {
        return;
    }
    auto steps = static_cast<long long>(std::ceil(std::abs(t) * bound / 0.5));
    steps = std::max(steps, 1LL);
    double dt = t / static_cast<double>(steps);
    double step_tol = tol_ / static_cast<double>(steps);
    auto amps = psi.amplitudes();
    term_.resize(amps.size());
    next_.resize(amps.size());

    for (long long s = 0; s < steps; s++) {
        std::copy(amps.begin(), amps.end(), term_.begin());
        int m = 1;
        for (;; m++) {
            if (m > kMaxTerms) {
                throw NumericalFailure("Taylor series did not converge");
            }
            h.apply(term_, next_);
            Amplitude f{0, -dt / m};
            for (std::size_t b = 0; b < amps.size(); b++) {
                next_[b] *= f;
                amps[b] += next_[b];
            }
            std::swap(term_, next_);
            // Successive terms shrink by at least 1/2, so the tail is below
            // the last term's norm.
            double tn = norm2(term_);
            if (!std::isfinite(tn)) {
                throw NumericalFailure("non-finite amplitude during evolution");
            }
            if (tn <= step_tol) {
                break;
            }
        }
    }
}

StateVector evolve(const PauliStringOperator &h, double t, StateVector psi, double tol) {
    Propagator p(tol);
    p.apply(h, t, psi);
    return psi;
}

}  // namespace walshpulse
