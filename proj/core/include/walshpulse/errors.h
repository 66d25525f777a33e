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

#ifndef WALSHPULSE_ERRORS_H
#define WALSHPULSE_ERRORS_H

#include <stdexcept>
#include <string>

#include "walshpulse/walsh.h"

namespace walshpulse {

/// A target term asks for a coupling the resource does not have.
class DivisionByZeroCoupling : public std::invalid_argument {
   public:
    DivisionByZeroCoupling(int i, int j, Pauli channel)
        : std::invalid_argument(
              "target coupling " + std::string(1, pauli_char(channel)) + std::to_string(i) +
              std::string(1, pauli_char(channel)) + std::to_string(j) + " has no resource coupling to rescale"),
          i_(i),
          j_(j),
          channel_(channel) {
    }

    int i() const {
        return i_;
    }
    int j() const {
        return j_;
    }
    Pauli channel() const {
        return channel_;
    }

   private:
    int i_;
    int j_;
    Pauli channel_;
};

/// A propagator or solver could not reach its requested accuracy.
class NumericalFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace walshpulse

#endif
