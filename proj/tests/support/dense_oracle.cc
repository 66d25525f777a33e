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

#include "dense_oracle.h"

#include <cmath>
#include <numbers>

namespace oracle {

using walshpulse::Pauli;
using cd = std::complex<double>;

Matrix pauli_matrix(Pauli p) {
    Matrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix embed(const Matrix &m, int qubit, int n) {
    std::size_t dim = std::size_t{1} << n;
    std::size_t bit = std::size_t{1} << qubit;
    Matrix out = Matrix::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; col++) {
        int c = (col & bit) ? 1 : 0;
        for (int r = 0; r < 2; r++) {
            std::size_t row = r ? (col | bit) : (col & ~bit);
            out(row, col) = m(r, c);
        }
    }
    return out;
}

Matrix axis_matrix(const walshpulse::Axis &a) {
    return a.x * pauli_matrix(Pauli::X) + a.y * pauli_matrix(Pauli::Y) + a.z * pauli_matrix(Pauli::Z);
}

Matrix gate_matrix(const walshpulse::SingleQubitGate &g) {
    return g.w() * pauli_matrix(Pauli::I) -
           cd(0, 1) * (g.x() * pauli_matrix(Pauli::X) + g.y() * pauli_matrix(Pauli::Y) + g.z() * pauli_matrix(Pauli::Z));
}

namespace {

Matrix identity(int n) {
    std::size_t dim = std::size_t{1} << n;
    return Matrix::Identity(dim, dim);
}

/// exp(-i angle/2 O) on one qubit.
Matrix rotation(Pauli p, double angle) {
    return std::cos(angle / 2) * pauli_matrix(Pauli::I) - cd(0, 1) * std::sin(angle / 2) * pauli_matrix(p);
}

Matrix comm(const Matrix &a, const Matrix &b) {
    return a * b - b * a;
}

}  // namespace

Matrix layer_matrix(const walshpulse::PulseLayer &layer) {
    int n = static_cast<int>(layer.size());
    Matrix m = identity(n);
    for (int q = 0; q < n; q++) {
        m = embed(pauli_matrix(layer[q]), q, n) * m;
    }
    return m;
}

Matrix set_matrix(const std::vector<walshpulse::SingleQubitGate> &gates) {
    int n = static_cast<int>(gates.size());
    Matrix m = identity(n);
    for (int q = 0; q < n; q++) {
        m = embed(gate_matrix(gates[q]), q, n) * m;
    }
    return m;
}

Matrix resource(const walshpulse::ResourceHamiltonian &r) {
    int n = r.n_qubits();
    std::size_t dim = std::size_t{1} << n;
    Matrix h = Matrix::Zero(dim, dim);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            h += r.jx(i, j) * embed(pauli_matrix(Pauli::X), i, n) * embed(pauli_matrix(Pauli::X), j, n);
            h += r.jy(i, j) * embed(pauli_matrix(Pauli::Y), i, n) * embed(pauli_matrix(Pauli::Y), j, n);
        }
    }
    return h + fields(n, r.fields());
}

Matrix target(const walshpulse::TargetSpec &t) {
    std::size_t dim = std::size_t{1} << t.n_qubits;
    Matrix h = Matrix::Zero(dim, dim);
    for (const auto &term : t.terms) {
        h += term.strength * embed(axis_matrix(term.op_i), term.i, t.n_qubits) *
             embed(axis_matrix(term.op_j), term.j, t.n_qubits);
    }
    return h;
}

Matrix fields(int n, const std::vector<walshpulse::LocalField> &f) {
    std::size_t dim = std::size_t{1} << n;
    Matrix h = Matrix::Zero(dim, dim);
    for (std::size_t q = 0; q < f.size(); q++) {
        h += embed(axis_matrix({f[q].hx, f[q].hy, f[q].hz}), static_cast<int>(q), n);
    }
    return h;
}

Matrix average_hamiltonian(const walshpulse::PulseSchedule &s, const Matrix &h) {
    Matrix avg = Matrix::Zero(h.rows(), h.cols());
    for (auto [b, factor] : s.execution_order()) {
        const auto &block = s.blocks[b];
        auto layers = s.block_layers(b);
        Matrix inner = Matrix::Zero(h.rows(), h.cols());
        for (std::size_t k = 0; k < layers.size(); k++) {
            Matrix p = layer_matrix(layers[k]);
            inner += block.interval_durations[k] * p.adjoint() * h * p;
        }
        // set_post S is applied last, so the block implements S H S^dagger.
        Matrix sp = set_matrix(block.set_post);
        avg += factor * block.c * sp * inner * sp.adjoint();
    }
    return avg;
}

Matrix rotation_error_generator(const walshpulse::PulseSchedule &s, const Matrix &h, const std::vector<double> &delta,
                                std::uint64_t cycle) {
    int n = s.n_qubits;
    const cd i_unit(0, 1);
    Matrix gen = Matrix::Zero(h.rows(), h.cols());
    for (auto [b, factor] : s.execution_order()) {
        const auto &block = s.blocks[b];
        auto layers = s.block_layers(b);
        Matrix bar = Matrix::Zero(h.rows(), h.cols());
        Matrix err = Matrix::Zero(h.rows(), h.cols());
        for (std::size_t k = 0; k < layers.size(); k++) {
            Matrix p = layer_matrix(layers[k]);
            Matrix hk = p.adjoint() * h * p;
            bar += block.interval_durations[k] * hk;
            for (int q = 0; q < n; q++) {
                if (layers[k][q] == Pauli::I) {
                    continue;
                }
                double sd = s.sign(q, cycle) * delta[q];
                err += block.interval_durations[k] * (i_unit * sd / 2.0) *
                       comm(embed(pauli_matrix(layers[k][q]), q, n), hk);
            }
        }
        for (int q = 0; q < n; q++) {
            if (auto p = block.set_post[q].as_pauli()) {
                double sd = s.sign(q, cycle) * delta[q];
                err += (-i_unit * sd / 2.0) * comm(embed(pauli_matrix(*p), q, n), bar);
            }
        }
        Matrix sp = set_matrix(block.set_post);
        gen += factor * block.c * sp * err * sp.adjoint();
    }
    return gen;
}

Matrix expm_hermitian(const Matrix &h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        phases(k) = std::exp(cd(0, -t * es.eigenvalues()(k)));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix schedule_unitary(const walshpulse::PulseSchedule &s, const walshpulse::ResourceHamiltonian &r, double tau,
                        std::uint64_t cycles, const std::vector<double> &delta) {
    int n = s.n_qubits;
    Matrix h = resource(r);
    Matrix u = identity(n);
    auto d = [&](int q) { return delta.empty() ? 0.0 : delta[q]; };
    double shrink = s.fp_deformation ? s.fp_deformation->shrink : 0.0;
    for (std::uint64_t l = 0; l < cycles; l++) {
        auto pulse = [&](const walshpulse::PulseLayer &layer) {
            Matrix m = identity(n);
            for (int q = 0; q < n; q++) {
                if (layer[q] != Pauli::I) {
                    m = embed(rotation(layer[q], s.sign(q, l) * (std::numbers::pi + d(q))), q, n) * m;
                }
            }
            return m;
        };
        for (auto [b, factor] : s.execution_order()) {
            const auto &block = s.blocks[b];
            auto layers = s.block_layers(b);
            walshpulse::PulseLayer set_layer(n, Pauli::I);
            Matrix other = identity(n);
            for (int q = 0; q < n; q++) {
                if (auto p = block.set_post[q].as_pauli()) {
                    set_layer[q] = *p;
                } else {
                    other = embed(gate_matrix(block.set_post[q]), q, n) * other;
                }
            }
            Matrix set_post = pulse(set_layer) * other;
            double period = factor * block.c * tau;
            u = set_post.inverse() * u;
            for (std::size_t k = 0; k < layers.size(); k++) {
                double dt = block.interval_durations[k] * period;
                if (shrink > 0 && (k == 0 || (s.trotter_order == 2 && k + 1 == layers.size()))) {
                    dt -= period * (s.trotter_order == 2 ? shrink / 2 : shrink);
                }
                Matrix p = pulse(layers[k]);
                u = p.inverse() * expm_hermitian(h, dt) * p * u;
            }
            u = set_post * u;
        }
    }
    return u;
}

Vector to_vector(const walshpulse::StateVector &psi) {
    Vector v(psi.dimension());
    for (std::size_t b = 0; b < psi.dimension(); b++) {
        v(b) = psi[b];
    }
    return v;
}

double max_abs(const Matrix &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace oracle
