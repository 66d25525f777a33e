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

#include "walshpulse/pauli_operator.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace walshpulse {

PauliString PauliString::single(Pauli p, int qubit) {
    PauliString s;
    s.set(qubit, p);
    return s;
}

PauliString PauliString::from_text(std::string_view text) {
    if (text.size() > 64) {
        throw std::invalid_argument("Pauli string longer than 64 qubits");
    }
    PauliString s;
    for (std::size_t k = 0; k < text.size(); k++) {
        s.set(static_cast<int>(k), pauli_from_char(text[k]));
    }
    return s;
}

Pauli PauliString::at(int qubit) const {
    bool bx = (x >> qubit) & 1;
    bool bz = (z >> qubit) & 1;
    if (bx) {
        return bz ? Pauli::Y : Pauli::X;
    }
    return bz ? Pauli::Z : Pauli::I;
}

void PauliString::set(int qubit, Pauli p) {
    if (qubit < 0 || qubit >= 64) {
        throw std::invalid_argument("Pauli string qubit out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    x &= ~bit;
    z &= ~bit;
    if (p == Pauli::X || p == Pauli::Y) {
        x |= bit;
    }
    if (p == Pauli::Z || p == Pauli::Y) {
        z |= bit;
    }
}

std::string PauliString::to_text(int n_qubits) const {
    std::string s;
    for (int q = 0; q < n_qubits; q++) {
        s += pauli_char(at(q));
    }
    return s;
}

PauliStringOperator::PauliStringOperator(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 30) {
        throw std::invalid_argument("operator qubit count must be in [0, 30]");
    }
}

void PauliStringOperator::add(double coefficient, PauliString string) {
    if (!std::isfinite(coefficient)) {
        throw std::invalid_argument("non-finite Pauli coefficient");
    }
    std::uint64_t mask = n_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_));
    if ((string.x | string.z) & ~mask) {
        throw std::invalid_argument("Pauli string acts outside the operator's qubits");
    }
    if (coefficient == 0) {
        return;
    }
    terms_.push_back({coefficient, string});
    // i^{|x & z|} folded into the coefficient.
    static const Amplitude kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amplitude c = coefficient * kPhase[std::popcount(string.x & string.z) & 3];
    for (auto &g : groups_) {
        if (g.x == string.x) {
            for (auto &t : g.terms) {
                if (t.z == string.z) {
                    t.coefficient += c;
                    return;
                }
            }
            g.terms.push_back({c, string.z});
            return;
        }
    }
    groups_.push_back({string.x, {{c, string.z}}});
}

PauliStringOperator &PauliStringOperator::operator+=(const PauliStringOperator &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("adding operators on different qubit counts");
    }
    for (const auto &t : other.terms_) {
        add(t.coefficient, t.string);
    }
    return *this;
}

PauliStringOperator PauliStringOperator::operator+(const PauliStringOperator &other) const {
    PauliStringOperator out = *this;
    out += other;
    return out;
}

PauliStringOperator PauliStringOperator::operator*(double s) const {
    PauliStringOperator out(n_);
    for (const auto &t : terms_) {
        out.add(s * t.coefficient, t.string);
    }
    return out;
}

double PauliStringOperator::norm_bound() const {
    double s = 0;
    for (const auto &t : terms_) {
        s += std::abs(t.coefficient);
    }
    return s;
}

void PauliStringOperator::apply(std::span<const Amplitude> in, std::span<Amplitude> out) const {
    std::size_t dim = std::size_t{1} << n_;
    if (in.size() != dim || out.size() != dim) {
        throw std::invalid_argument("state dimension does not match operator");
    }
    std::fill(out.begin(), out.end(), Amplitude{0, 0});
    for (const auto &g : groups_) {
        if (g.terms.size() == 1) {
            Amplitude c = g.terms[0].coefficient;
            std::uint64_t z = g.terms[0].z;
            for (std::size_t b = 0; b < dim; b++) {
                Amplitude v = c * in[b];
                out[b ^ g.x] += (std::popcount(b & z) & 1) ? -v : v;
            }
            continue;
        }
        for (std::size_t b = 0; b < dim; b++) {
            Amplitude acc{0, 0};
            for (const auto &t : g.terms) {
                acc += (std::popcount(b & t.z) & 1) ? -t.coefficient : t.coefficient;
            }
            out[b ^ g.x] += acc * in[b];
        }
    }
}

double PauliStringOperator::expectation(std::span<const Amplitude> psi) const {
    std::vector<Amplitude> h(psi.size());
    apply(psi, h);
    Amplitude acc{0, 0};
    for (std::size_t b = 0; b < psi.size(); b++) {
        acc += std::conj(psi[b]) * h[b];
    }
    return acc.real();
}

PauliStringOperator field_operator(int n_qubits, std::span<const LocalField> fields) {
    PauliStringOperator h(n_qubits);
    if (fields.empty()) {
        return h;
    }
    if (fields.size() != static_cast<std::size_t>(n_qubits)) {
        throw std::invalid_argument("need one local field per qubit");
    }
    for (int q = 0; q < n_qubits; q++) {
        h.add(fields[q].hx, PauliString::single(Pauli::X, q));
        h.add(fields[q].hy, PauliString::single(Pauli::Y, q));
        h.add(fields[q].hz, PauliString::single(Pauli::Z, q));
    }
    return h;
}

PauliStringOperator resource_operator(const ResourceHamiltonian &resource, std::span<const LocalField> extra_fields) {
    int n = resource.n_qubits();
    PauliStringOperator h(n);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            PauliString xx;
            xx.set(i, Pauli::X);
            xx.set(j, Pauli::X);
            PauliString yy;
            yy.set(i, Pauli::Y);
            yy.set(j, Pauli::Y);
            h.add(resource.jx(i, j), xx);
            h.add(resource.jy(i, j), yy);
        }
    }
    h += field_operator(n, resource.fields());
    h += field_operator(n, extra_fields);
    return h;
}

PauliStringOperator target_operator(const TargetSpec &target) {
    target.validate();
    PauliStringOperator h(target.n_qubits);
    const Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (const auto &t : target.terms) {
        const double a[3] = {t.op_i.x, t.op_i.y, t.op_i.z};
        const double b[3] = {t.op_j.x, t.op_j.y, t.op_j.z};
        for (int k = 0; k < 3; k++) {
            for (int l = 0; l < 3; l++) {
                PauliString s;
                s.set(t.i, kAxes[k]);
                s.set(t.j, kAxes[l]);
                h.add(t.strength * a[k] * b[l], s);
            }
        }
    }
    return h;
}

}  // namespace walshpulse
