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

#ifndef WALSHPULSE_PAULI_OPERATOR_H
#define WALSHPULSE_PAULI_OPERATOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walshpulse/resource.h"
#include "walshpulse/target.h"
#include "walshpulse/walsh.h"

namespace walshpulse {

using Amplitude = std::complex<double>;

/// P = i^{|x & z|} X^x Z^z, so each qubit carries exactly I, X, Y or Z.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    static PauliString single(Pauli p, int qubit);
    /// Character k is the Pauli on qubit k; '_' and 'I' are identity.
    static PauliString from_text(std::string_view text);

    Pauli at(int qubit) const;
    void set(int qubit, Pauli p);
    std::string to_text(int n_qubits) const;
    bool operator==(const PauliString &) const = default;
};

struct PauliTerm {
    double coefficient = 0;
    PauliString string;
};

/// Real linear combination of Pauli strings, applied without forming a matrix.
class PauliStringOperator {
   public:
    explicit PauliStringOperator(int n_qubits = 0);

    void add(double coefficient, PauliString string);
    PauliStringOperator &operator+=(const PauliStringOperator &other);
    PauliStringOperator operator+(const PauliStringOperator &other) const;
    PauliStringOperator operator*(double s) const;

    int n_qubits() const {
        return n_;
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }
    /// Sum of |coefficients|, an upper bound on the spectral norm.
    double norm_bound() const;
    /// out = H in. The spans must not alias.
    void apply(std::span<const Amplitude> in, std::span<Amplitude> out) const;
    /// <psi|H|psi>.
    double expectation(std::span<const Amplitude> psi) const;

   private:
    struct GroupTerm {
        Amplitude coefficient;
        std::uint64_t z;
    };
    struct Group {
        std::uint64_t x;
        std::vector<GroupTerm> terms;
    };

    int n_;
    std::vector<PauliTerm> terms_;
    std::vector<Group> groups_;
};

/// H_R plus the resource's local fields and any extra fields.
PauliStringOperator resource_operator(const ResourceHamiltonian &resource, std::span<const LocalField> extra_fields = {});

/// sum_i h_i . sigma_i.
PauliStringOperator field_operator(int n_qubits, std::span<const LocalField> fields);

/// Expands every (a . sigma)(b . sigma) term into Pauli strings.
PauliStringOperator target_operator(const TargetSpec &target);

}  // namespace walshpulse

#endif
