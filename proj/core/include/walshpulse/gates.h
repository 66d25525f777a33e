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

#ifndef WALSHPULSE_GATES_H
#define WALSHPULSE_GATES_H

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "walshpulse/walsh.h"

namespace walshpulse {

/// Bloch-sphere direction; the single-qubit operator is x X + y Y + z Z.
struct Axis {
    double x = 0;
    double y = 0;
    double z = 0;

    static Axis of(Pauli p);
    double dot(const Axis &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    Axis cross(const Axis &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    Axis normalized() const;
    Axis operator-() const {
        return {-x, -y, -z};
    }
    Axis operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    Axis operator+(const Axis &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    bool approx_equal(const Axis &o, double tol = 1e-12) const;
    /// X, Y or Z when the axis is exactly (within tol) that unit vector.
    std::optional<Pauli> as_pauli(double tol = 1e-12) const;
};

/// SU(2) element U = w I - i (x X + y Y + z Z). Global phase -1 is ignored by
/// all comparisons.
class SingleQubitGate {
   public:
    SingleQubitGate() = default;

    static SingleQubitGate from_quaternion(double w, double x, double y, double z);
    static SingleQubitGate pauli(Pauli p);
    static SingleQubitGate hadamard();
    /// exp(-i angle/2 n.sigma).
    static SingleQubitGate rotation(const Axis &axis, double angle);
    /// Smallest rotation carrying unit vector `from` onto unit vector `to`.
    /// Antiparallel inputs use a pi rotation about a perpendicular Pauli axis.
    static SingleQubitGate mapping(const Axis &from, const Axis &to);

    double w() const {
        return w_;
    }
    double x() const {
        return x_;
    }
    double y() const {
        return y_;
    }
    double z() const {
        return z_;
    }

    /// Gate that applies `rhs` first, then this.
    SingleQubitGate operator*(const SingleQubitGate &rhs) const;
    SingleQubitGate inverse() const {
        return from_raw(w_, -x_, -y_, -z_);
    }
    /// Bloch vector of U (a.sigma) U^dagger.
    Axis conjugate(const Axis &a) const;
    /// Row-major 2x2 matrix.
    std::array<std::complex<double>, 4> matrix() const;

    bool approx_equal(const SingleQubitGate &o, double tol = 1e-12) const;
    bool is_identity(double tol = 1e-12) const {
        return approx_equal(SingleQubitGate{}, tol);
    }
    std::optional<Pauli> as_pauli(double tol = 1e-12) const;
    /// "I", "X", "Y", "Z", "H", or empty when the gate has no short name.
    std::string label() const;

   private:
    static SingleQubitGate from_raw(double w, double x, double y, double z);

    double w_ = 1;
    double x_ = 0;
    double y_ = 0;
    double z_ = 0;
};

}  // namespace walshpulse

#endif
