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

#ifndef MJONES_TOMOGRAPHY_HPP
#define MJONES_TOMOGRAPHY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mjones/anyon.hpp"

namespace mjones {

inline Eigen::Matrix2cd pauli_matrix(char axis) {
    const cplx i(0, 1);
    Eigen::Matrix2cd m;
    switch (axis) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -i, i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli '") + axis + "'");
    }
    return m;
}

/// Labels II, IX, IY, IZ, XI, ... for k qubits.
inline std::vector<std::string> pauli_labels(int k) {
    std::vector<std::string> out{""};
    for (int q = 0; q < k; q++) {
        std::vector<std::string> next;
        for (auto &s : out) {
            for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
        }
        out = next;
    }
    return out;
}

inline CMatrix pauli_operator(const std::string &label) {
    CMatrix m = CMatrix::Identity(1, 1);
    for (char c : label) m = kron(m, pauli_matrix(c));
    return m;
}

inline int qubits_of(const CMatrix &u) {
    int k = 0;
    while ((Eigen::Index{1} << k) < u.rows()) k++;
    if ((Eigen::Index{1} << k) != u.rows() || u.rows() != u.cols()) {
        throw std::invalid_argument("operator is not a square 2^k matrix");
    }
    return k;
}

/// c_m = Tr(E_m^dagger U) / 2^k, basis order I, X, Y, Z per qubit.
inline Eigen::VectorXcd pauli_coefficients(const CMatrix &u) {
    int k = qubits_of(u);
    if (k > 3) throw std::invalid_argument("Pauli decomposition limited to 3 qubits");
    if ((u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > 1e-8) {
        throw std::invalid_argument("operator is not unitary");
    }
    auto labels = pauli_labels(k);
    Eigen::VectorXcd c(labels.size());
    for (size_t m = 0; m < labels.size(); m++) {
        c(m) = (pauli_operator(labels[m]).adjoint() * u).trace() / static_cast<double>(u.rows());
    }
    return c;
}

struct ChiMatrix {
    int qubits;
    std::vector<std::string> labels;
    CMatrix chi;

    cplx at(const std::string &row, const std::string &col) const {
        auto idx = [&](const std::string &l) {
            for (size_t i = 0; i < labels.size(); i++) {
                if (labels[i] == l) return static_cast<Eigen::Index>(i);
            }
            throw std::out_of_range("no Pauli label " + l);
        };
        return chi(idx(row), idx(col));
    }
};

/// chi_mn = c_m conj(c_n) for a unitary process.
inline ChiMatrix chi_from_unitary(const CMatrix &u) {
    int k = qubits_of(u);
    if (k > 2) throw std::invalid_argument("chi matrices are limited to 2 qubits");
    Eigen::VectorXcd c = pauli_coefficients(u);
    return {k, pauli_labels(k), c * c.adjoint()};
}

/// Tr(chi_a chi_b).
inline double process_fidelity(const ChiMatrix &a, const ChiMatrix &b) { return (a.chi * b.chi).trace().real(); }

/// Rebuilds U (up to global phase) from the dominant eigenvector of chi.
inline CMatrix unitary_from_chi(const ChiMatrix &x) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(x.chi);
    Eigen::Index top = x.chi.rows() - 1;
    Eigen::VectorXcd c = es.eigenvectors().col(top) * std::sqrt(std::max(0.0, es.eigenvalues()(top)));
    CMatrix u = CMatrix::Zero(Eigen::Index{1} << x.qubits, Eigen::Index{1} << x.qubits);
    for (size_t m = 0; m < x.labels.size(); m++) u += c(m) * pauli_operator(x.labels[m]);
    return u;
}

inline CMatrix density_matrix(const Eigen::VectorXcd &s) { return s * s.adjoint(); }

/// <psi|rho|psi>.
inline double state_fidelity(const CMatrix &rho, const Eigen::VectorXcd &psi) {
    return (psi.adjoint() * rho * psi)(0, 0).real();
}

/// max |A - c B| over entries, c the unit-modulus phase best aligning B to A.
inline double distance_up_to_phase(const CMatrix &a, const CMatrix &b) {
    cplx ov = (b.adjoint() * a).trace();
    cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

/// As distance_up_to_phase, but also rescales B by the best real factor.
inline double distance_up_to_scalar(const CMatrix &a, const CMatrix &b) {
    cplx nb = (b.adjoint() * b).trace();
    if (std::abs(nb) == 0) return a.cwiseAbs().maxCoeff();
    cplx c = (b.adjoint() * a).trace() / nb;
    return (a - c * b).cwiseAbs().maxCoeff();
}

/// Splits an 8x8 operator into F (x) I (idle = 2) or I (x) F (idle = 0),
/// where idle is the index of the qubit that is not acted on. Returns F and
/// sets residual to max |op - rebuilt|.
inline CMatrix two_qubit_factor(const CMatrix &op, int idle, double *residual = nullptr) {
    if (op.rows() != 8 || op.cols() != 8) throw std::invalid_argument("expected an 8x8 operator");
    CMatrix id = CMatrix::Identity(2, 2);
    CMatrix f(4, 4), rebuilt;
    if (idle == 2) {
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) f(r, c) = op(2 * r, 2 * c);
        }
        rebuilt = kron(f, id);
    } else if (idle == 0) {
        f = op.topLeftCorner(4, 4);
        rebuilt = kron(id, f);
    } else {
        throw std::invalid_argument("idle qubit must be 0 or 2");
    }
    if (residual) *residual = (op - rebuilt).cwiseAbs().maxCoeff();
    return f;
}

}  // namespace mjones

#endif
