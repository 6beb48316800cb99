// Copyright 2026 The mjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MJONES_STATE_HPP
#define MJONES_STATE_HPP

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "mjones/pauli.hpp"

namespace mjones {

/// Dense amplitudes over n qubits, site 1 most significant.
struct StateVector {
    int qubits = 0;
    Eigen::VectorXcd amp;

    StateVector() = default;
    StateVector(int n, Eigen::VectorXcd a) : qubits(n), amp(std::move(a)) {
        if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
        if (amp.size() != (Eigen::Index{1} << n)) throw std::invalid_argument("amplitude vector has wrong length");
    }

    static StateVector basis(int n, uint32_t index) {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
        a(index) = 1;
        return {n, a};
    }

    double norm() const { return amp.norm(); }

    StateVector &normalize() {
        double nrm = amp.norm();
        if (!(nrm > 0)) throw std::domain_error("cannot normalize a zero vector");
        amp /= nrm;
        return *this;
    }
};

/// Returns P|psi> via bit strides: X^x Z^z |b> = (-1)^{|z & b|} |b ^ x>.
inline Eigen::VectorXcd apply(const PauliString &p, const Eigen::VectorXcd &v) {
    if (v.size() != (Eigen::Index{1} << p.n)) throw std::invalid_argument("Pauli string and vector size differ");
    Eigen::VectorXcd out(v.size());
    const std::complex<double> ph = p.phase_factor();
    for (uint32_t b = 0; b < static_cast<uint32_t>(v.size()); b++) {
        double s = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
        out(b ^ p.x) = ph * s * v(b);
    }
    return out;
}

inline StateVector apply(const PauliString &p, const StateVector &s) { return {s.qubits, apply(p, s.amp)}; }

inline std::complex<double> inner(const StateVector &a, const StateVector &b) { return a.amp.dot(b.amp); }

/// |<a|b>|^2 for normalized inputs.
inline double amplitude_probability(const StateVector &a, const StateVector &b) { return std::norm(inner(a, b)); }

/// Single-qubit eigenvector of an axis: bar=false for eigenvalue +1
/// (|x>, |y>, |z>), bar=true for -1. |y> = (|0> + i|1>)/sqrt2.
inline Eigen::Vector2cd axis_eigenvector(char axis, bool bar) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::complex<double> i(0, 1);
    switch (axis) {
        case 'x':
        case 'X':
            return bar ? Eigen::Vector2cd(r, -r) : Eigen::Vector2cd(r, r);
        case 'y':
        case 'Y':
            return bar ? Eigen::Vector2cd(r, -i * r) : Eigen::Vector2cd(r, i * r);
        case 'z':
        case 'Z':
            return bar ? Eigen::Vector2cd(0, 1) : Eigen::Vector2cd(1, 0);
        default:
            throw std::invalid_argument(std::string("unknown axis '") + axis + "'");
    }
}

struct SiteLabel {
    char axis;
    bool bar;
};

/// Tensor product of per-site eigenvectors, site 1 first.
inline StateVector product_state(const std::vector<SiteLabel> &labels) {
    Eigen::VectorXcd v(1);
    v(0) = 1;
    for (const auto &l : labels) {
        Eigen::Vector2cd e = axis_eigenvector(l.axis, l.bar);
        Eigen::VectorXcd nv(v.size() * 2);
        for (Eigen::Index k = 0; k < v.size(); k++) {
            nv(2 * k) = v(k) * e(0);
            nv(2 * k + 1) = v(k) * e(1);
        }
        v = nv;
    }
    return {static_cast<int>(labels.size()), v};
}

/// Applies a 2x2 unitary to one site.
inline StateVector apply_single(const Eigen::Matrix2cd &u, int site, const StateVector &s) {
    uint32_t b = PauliString::bit(s.qubits, site);
    StateVector out = s;
    for (uint32_t k = 0; k < static_cast<uint32_t>(s.amp.size()); k++) {
        if (k & b) continue;
        auto a0 = s.amp(k), a1 = s.amp(k | b);
        out.amp(k) = u(0, 0) * a0 + u(0, 1) * a1;
        out.amp(k | b) = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

}  // namespace mjones

#endif
