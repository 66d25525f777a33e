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

#include "walshpulse/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walshpulse {

Axis Axis::of(Pauli p) {
    switch (p) {
        case Pauli::X:
            return {1, 0, 0};
        case Pauli::Y:
            return {0, 1, 0};
        case Pauli::Z:
            return {0, 0, 1};
        case Pauli::I:
            break;
    }
    throw std::invalid_argument("identity has no Bloch axis");
}

double Axis::norm() const {
    return std::sqrt(dot(*this));
}

Axis Axis::normalized() const {
    double n = norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw std::invalid_argument("axis must be a finite nonzero vector");
    }
    return {x / n, y / n, z / n};
}

bool Axis::approx_equal(const Axis &o, double tol) const {
    return std::abs(x - o.x) <= tol && std::abs(y - o.y) <= tol && std::abs(z - o.z) <= tol;
}

std::optional<Pauli> Axis::as_pauli(double tol) const {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (approx_equal(Axis::of(p), tol)) {
            return p;
        }
    }
    return std::nullopt;
}

SingleQubitGate SingleQubitGate::from_raw(double w, double x, double y, double z) {
    SingleQubitGate g;
    g.w_ = w;
    g.x_ = x;
    g.y_ = y;
    g.z_ = z;
    return g;
}

SingleQubitGate SingleQubitGate::from_quaternion(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!std::isfinite(n) || std::abs(n - 1) > 1e-9) {
        throw std::invalid_argument("gate quaternion must have unit norm");
    }
    return from_raw(w / n, x / n, y / n, z / n);
}

SingleQubitGate SingleQubitGate::pauli(Pauli p) {
    switch (p) {
        case Pauli::I:
            return {};
        case Pauli::X:
            return from_raw(0, 1, 0, 0);
        case Pauli::Y:
            return from_raw(0, 0, 1, 0);
        case Pauli::Z:
            return from_raw(0, 0, 0, 1);
    }
    return {};
}

SingleQubitGate SingleQubitGate::hadamard() {
    return from_raw(0, std::numbers::sqrt2 / 2, 0, std::numbers::sqrt2 / 2);
}

SingleQubitGate SingleQubitGate::rotation(const Axis &axis, double angle) {
    Axis n = axis.normalized();
    double s = std::sin(angle / 2);
    return from_raw(std::cos(angle / 2), s * n.x, s * n.y, s * n.z);
}

SingleQubitGate SingleQubitGate::mapping(const Axis &from, const Axis &to) {
    Axis a = from.normalized();
    Axis b = to.normalized();
    Axis c = a.cross(b);
    double s = c.norm();
    double d = a.dot(b);
    if (s > 1e-12) {
        return rotation(c * (1 / s), std::atan2(s, d));
    }
    if (d > 0) {
        return {};
    }
    // pi about a perpendicular axis; prefer Pauli axes so sign flips of X or Y
    // couplings become Y or X pulses.
    bool mostly_z = std::abs(a.z) > std::abs(a.x) && std::abs(a.z) > std::abs(a.y);
    Axis perp = a.cross(mostly_z ? Axis{0, 1, 0} : Axis{0, 0, 1});
    return rotation(perp, std::numbers::pi);
}

SingleQubitGate SingleQubitGate::operator*(const SingleQubitGate &r) const {
    // (w1 - i v1.s)(w2 - i v2.s) = w1 w2 - v1.v2 - i (w1 v2 + w2 v1 + v1 x v2).s
    double w = w_ * r.w_ - (x_ * r.x_ + y_ * r.y_ + z_ * r.z_);
    double x = w_ * r.x_ + r.w_ * x_ + (y_ * r.z_ - z_ * r.y_);
    double y = w_ * r.y_ + r.w_ * y_ + (z_ * r.x_ - x_ * r.z_);
    double z = w_ * r.z_ + r.w_ * z_ + (x_ * r.y_ - y_ * r.x_);
    return from_raw(w, x, y, z);
}

Axis SingleQubitGate::conjugate(const Axis &a) const {
    Axis v{x_, y_, z_};
    Axis t = v.cross(a);
    return a + t * (2 * w_) + v.cross(t) * 2;
}

std::array<std::complex<double>, 4> SingleQubitGate::matrix() const {
    using C = std::complex<double>;
    return {C(w_, -z_), C(-y_, -x_), C(y_, -x_), C(w_, z_)};
}

bool SingleQubitGate::approx_equal(const SingleQubitGate &o, double tol) const {
    auto close = [&](double s) {
        return std::abs(w_ - s * o.w_) <= tol && std::abs(x_ - s * o.x_) <= tol && std::abs(y_ - s * o.y_) <= tol &&
               std::abs(z_ - s * o.z_) <= tol;
    };
    return close(1) || close(-1);
}

std::optional<Pauli> SingleQubitGate::as_pauli(double tol) const {
    for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
        if (approx_equal(pauli(p), tol)) {
            return p;
        }
    }
    return std::nullopt;
}

std::string SingleQubitGate::label() const {
    if (auto p = as_pauli()) {
        return std::string(1, pauli_char(*p));
    }
    if (approx_equal(hadamard())) {
        return "H";
    }
    return "";
}

}  // namespace walshpulse
