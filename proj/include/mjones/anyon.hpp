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

#ifndef MJONES_ANYON_HPP
#define MJONES_ANYON_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mjones/braid.hpp"

namespace mjones {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;

/// -(e^{-i pi/8}/sqrt2) [[1, i], [i, 1]]: exchange of two anyons from
/// neighbouring pairs.
inline Eigen::Matrix2cd mixing_exchange() {
    const cplx i(0, 1);
    Eigen::Matrix2cd k;
    k << 1, i, i, 1;
    return -(std::polar(1.0, -kPi / 8) / std::sqrt(2.0)) * k;
}

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return r;
}

/// Ising anyon braid generators in the fusion basis. Index 0 is the state
/// where every pair fuses to the vacuum.
///   pairs=2: B1, B2 on a 2-dim space.
///   pairs=3: B1..B4 on a 4-dim space.
inline std::vector<CMatrix> braid_generators(int pairs) {
    const cplx i(0, 1);
    const cplx w = std::polar(1.0, kPi / 8);
    CMatrix k = mixing_exchange();
    CMatrix id2 = CMatrix::Identity(2, 2);
    if (pairs == 2) {
        CMatrix b1 = CMatrix::Zero(2, 2);
        b1(0, 0) = -w;
        b1(1, 1) = w * i;
        return {b1, k};
    }
    if (pairs == 3) {
        CMatrix b1 = CMatrix::Zero(4, 4), b3 = CMatrix::Zero(4, 4);
        const cplx d1[4] = {-1.0, -1.0, i, i};
        const cplx d3[4] = {-1.0, i, i, -1.0};
        for (int j = 0; j < 4; j++) {
            b1(j, j) = w * d1[j];
            b3(j, j) = w * d3[j];
        }
        return {b1, kron(k, id2), b3, kron(id2, k)};
    }
    throw std::invalid_argument("only 2 or 3 anyon pairs are supported, got " + std::to_string(pairs));
}

/// Written-order product B_{g1} B_{g2} ... B_{gm}; a negative letter uses the
/// inverse (adjoint) generator. Letters are generator indices, not link
/// generators.
inline CMatrix evolve(const std::vector<int> &generators, int pairs) {
    auto gens = braid_generators(pairs);
    const auto dim = gens[0].rows();
    CMatrix u = CMatrix::Identity(dim, dim);
    for (int g : generators) {
        int k = std::abs(g);
        if (k < 1 || k > static_cast<int>(gens.size())) {
            throw std::out_of_range("generator B" + std::to_string(k) + " not available for " + std::to_string(pairs) +
                                    " pairs");
        }
        u = u * (g > 0 ? gens[k - 1] : CMatrix(gens[k - 1].adjoint()));
    }
    return u;
}

inline cplx vacuum_amplitude(const CMatrix &u) { return u(0, 0); }

/// Anyon generator realizing link generator sigma_k: sigma1 -> B2,
/// sigma2 -> B3. The closure for three pairs is read through B4 (see
/// link_unitary).
inline int link_generator(int sigma, int pairs) {
    if (pairs == 2 && sigma == 1) return 2;
    if (pairs == 3 && (sigma == 1 || sigma == 2)) return sigma + 1;
    throw std::out_of_range("link generator s" + std::to_string(sigma) + " has no image for " + std::to_string(pairs) +
                            " pairs");
}

/// Unitary whose vacuum amplitude is the closure amplitude of `word`.
/// For three pairs this is B4 U B4^-1, the form of the Borromean amplitude.
inline CMatrix link_unitary(const BraidWord &word, int pairs) {
    validate(word);
    if (word.strands > pairs) {
        throw std::out_of_range(std::to_string(word.strands) + "-strand word needs at least that many pairs");
    }
    std::vector<int> gens;
    if (pairs == 3) gens.push_back(4);
    for (int g : word.letters) gens.push_back(g > 0 ? link_generator(g, pairs) : -link_generator(-g, pairs));
    if (pairs == 3) gens.push_back(-4);
    return evolve(gens, pairs);
}

/// -t^(3/4) at t = i with t^(1/4) = e^{5 i pi/8}. This branch reproduces the
/// signed values of V(i) and agrees with the Kauffman oracle.
inline cplx writhe_phase_base() { return std::polar(1.0, 7 * kPi / 8); }

/// -t^(3/4) with the principal t^(3/4) = e^{3 i pi/8}. Kept for comparison.
inline cplx writhe_phase_principal() { return -std::polar(1.0, 3 * kPi / 8); }

struct JonesValue {
    cplx value;
    cplx writhe_phase;
    cplx amplitude;
    int pairs_used;
};

/// V = (-t^(3/4))^(-w) d^(n-1) <phi0|U|phi0> at t = i, d = sqrt2.
inline JonesValue jones_su2_2(const BraidWord &word, int pairs, cplx phase_base = writhe_phase_base()) {
    auto inv = link_invariants(word);
    cplx amp = vacuum_amplitude(link_unitary(word, pairs));
    cplx phase = std::pow(phase_base, -inv.writhe);
    double d = std::pow(std::sqrt(2.0), pairs - 1);
    return {phase * d * amp, phase, amp, pairs};
}

/// 2^((n-1)/2) |<phi0|U|phi0>|, phase-free.
inline double jones_majorana_abs(const BraidWord &word, int pairs) {
    return std::pow(2.0, (pairs - 1) / 2.0) * std::abs(vacuum_amplitude(link_unitary(word, pairs)));
}

inline int default_pairs(const BraidWord &word) { return word.max_generator() <= 1 ? 2 : 3; }

}  // namespace mjones

#endif
