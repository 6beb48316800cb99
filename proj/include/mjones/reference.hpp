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

// Published reference data for the five benchmark links and the 10-site
// braiding protocol: golden values, printed matrices and the tabulated
// intermediate states.

#ifndef MJONES_REFERENCE_HPP
#define MJONES_REFERENCE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mjones/anyon.hpp"
#include "mjones/braid.hpp"
#include "mjones/spin.hpp"

namespace mjones::reference {

struct Link {
    std::string name;
    std::string word;
    double abs_value;                // |V(i)|
    std::optional<double> signed_value;  // V(i) where the closed form is given
    double abs_amplitude;            // |<phi0|U|phi0>|
    double probability;              // |<000|final>|^2 in the spin protocol
};

inline const std::vector<Link> &links() {
    const double r2 = std::sqrt(2.0);
    static const std::vector<Link> l = {
        {"Hopf", "s1 s1", 0.0, 0.0, 0.0, 0.0},
        {"Trefoil", "s1 s1 s1", 1.0, -1.0, 1.0 / r2, 0.5},
        {"Solomon", "s1 s1 s1 s1", r2, -r2, 1.0, 1.0},
        {"Figure-Eight", "s1 s2^-1 s1 s2^-1", 1.0, std::nullopt, 0.5, 0.25},
        {"Borromean", "s1 s2^-1 s1 s2^-1 s1 s2^-1", 2.0, -2.0, 1.0, 1.0},
    };
    return l;
}

/// Printed final logical states, indexed like links().
inline std::vector<Eigen::VectorXcd> final_states() {
    const std::complex<double> i(0, 1);
    const double r = 1.0 / std::sqrt(2.0);
    auto v = [] { return Eigen::VectorXcd(Eigen::VectorXcd::Zero(8)); };
    Eigen::VectorXcd hopf = v(), tref = v(), sol = v(), fig = v(), bor = v();
    hopf(6) = 1;
    tref(0) = r;
    tref(6) = i * r;
    sol(0) = 1;
    fig(0) = 0.5;
    fig(3) = -0.5;
    fig(5) = -0.5 * i;
    fig(6) = -0.5 * i;
    bor(0) = 1;
    return {hopf, tref, sol, fig, bor};
}

inline Eigen::MatrixXcd from_rows(std::initializer_list<std::initializer_list<std::complex<double>>> rows,
                                  double scale) {
    Eigen::MatrixXcd m(rows.size(), rows.begin()->size());
    int r = 0;
    for (auto &row : rows) {
        int c = 0;
        for (auto x : row) m(r, c++) = x * scale;
        r++;
    }
    return m;
}

struct PrintedMatrices {
    Eigen::MatrixXcd ground;
    Eigen::MatrixXcd logical;
};

/// Matrices as printed, including their 1/sqrt2 prefactor.
inline PrintedMatrices printed(spin::Braid b) {
    const std::complex<double> i(0, 1);
    const double s = 1.0 / std::sqrt(2.0);
    switch (b) {
        case spin::Braid::sigma1:
            return {from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, i, 0, 0, 0, 0, 0},
                               {0, 0, 0, i, 0, 0, 0, 0},
                               {0, 0, 0, 0, i, 0, 0, 0},
                               {0, 0, 0, 0, 0, i, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1}},
                              s),
                    from_rows({{1, 0, 0, 0, 0, 0, i, 0},
                               {0, 1, 0, 0, 0, 0, 0, i},
                               {0, 0, 1, 0, i, 0, 0, 0},
                               {0, 0, 0, 1, 0, i, 0, 0},
                               {0, 0, i, 0, 1, 0, 0, 0},
                               {0, 0, 0, i, 0, 1, 0, 0},
                               {i, 0, 0, 0, 0, 0, 1, 0},
                               {0, i, 0, 0, 0, 0, 0, 1}},
                              s)};
        case spin::Braid::sigma1_inv:
            return {from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, -i, 0, 0, 0, 0, 0},
                               {0, 0, 0, -i, 0, 0, 0, 0},
                               {0, 0, 0, 0, -i, 0, 0, 0},
                               {0, 0, 0, 0, 0, -i, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1}},
                              s),
                    from_rows({{1, 0, 0, 0, 0, 0, -i, 0},
                               {0, 1, 0, 0, 0, 0, 0, -i},
                               {0, 0, 1, 0, -i, 0, 0, 0},
                               {0, 0, 0, 1, 0, -i, 0, 0},
                               {0, 0, -i, 0, 1, 0, 0, 0},
                               {0, 0, 0, -i, 0, 1, 0, 0},
                               {-i, 0, 0, 0, 0, 0, 1, 0},
                               {0, -i, 0, 0, 0, 0, 0, 1}},
                              s)};
        case spin::Braid::sigma2:
            return {from_rows({{1, 0, 1, 0, 0, 0, 0, 0},
                               {0, 1, 0, -1, 0, 0, 0, 0},
                               {-1, 0, 1, 0, 0, 0, 0, 0},
                               {0, 1, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 1, 0},
                               {0, 0, 0, 0, 0, 1, 0, -1},
                               {0, 0, 0, 0, -1, 0, 1, 0},
                               {0, 0, 0, 0, 0, 1, 0, 1}},
                              s),
                    from_rows({{1, 0, 0, 1, 0, 0, 0, 0},
                               {0, 1, 1, 0, 0, 0, 0, 0},
                               {0, -1, 1, 0, 0, 0, 0, 0},
                               {-1, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, 1},
                               {0, 0, 0, 0, 0, 1, 1, 0},
                               {0, 0, 0, 0, 0, -1, 1, 0},
                               {0, 0, 0, 0, -1, 0, 0, 1}},
                              s)};
        case spin::Braid::sigma2_inv:
            return {from_rows({{1, 0, -1, 0, 0, 0, 0, 0},
                               {0, 1, 0, 1, 0, 0, 0, 0},
                               {1, 0, 1, 0, 0, 0, 0, 0},
                               {0, -1, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, -1, 0},
                               {0, 0, 0, 0, 0, 1, 0, 1},
                               {0, 0, 0, 0, 1, 0, 1, 0},
                               {0, 0, 0, 0, 0, -1, 0, 1}},
                              s),
                    from_rows({{1, 0, 0, -1, 0, 0, 0, 0},
                               {0, 1, -1, 0, 0, 0, 0, 0},
                               {0, 1, 1, 0, 0, 0, 0, 0},
                               {1, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, -1},
                               {0, 0, 0, 0, 0, 1, -1, 0},
                               {0, 0, 0, 0, 0, 1, 1, 0},
                               {0, 0, 0, 0, 1, 0, 0, 1}},
                              s)};
    }
    return {};
}

/// Closed forms stated for the logical gates: (II + iXX)/sqrt2 on chains
/// 1-2 with chain 3 idle, and (II - iYX)/sqrt2 on chains 2-3 with chain 1 idle.
inline Eigen::MatrixXcd stated_l_sigma1() {
    const std::complex<double> i(0, 1);
    Eigen::Matrix2cd x, id = Eigen::Matrix2cd::Identity();
    x << 0, 1, 1, 0;
    Eigen::MatrixXcd f = (kron(id, id) + i * kron(x, x)) / std::sqrt(2.0);
    return kron(f, id);
}

inline Eigen::MatrixXcd stated_l_sigma2_inv() {
    const std::complex<double> i(0, 1);
    Eigen::Matrix2cd x, y, id = Eigen::Matrix2cd::Identity();
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    Eigen::MatrixXcd f = (kron(id, id) - i * kron(y, x)) / std::sqrt(2.0);
    return kron(id, f);
}

/// Initial ground amplitudes (alpha..nu) that encode logical |000>.
inline Eigen::VectorXcd initial_amplitudes() {
    const double a = 1.0 / (2 * std::sqrt(2.0));
    Eigen::VectorXcd v(8);
    v << a, -a, -a, a, a, -a, -a, a;
    return v;
}

// ---------------------------------------------------------------------------
// Tabulated intermediate states as functions of the ground amplitudes
// (alpha..nu). Each component k = (b1 b2 b3) contributes product states that
// differ from ground vector k on a few sites.

namespace detail {

struct Piece {
    std::complex<double> weight;
    std::map<int, SiteLabel> overrides;
};

using Pattern = std::function<std::vector<Piece>(int, int, int)>;

inline StateVector assemble(const Eigen::VectorXcd &amps, const Pattern &pattern) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << spin::kSites);
    for (int k = 0; k < 8; k++) {
        int b1 = (k >> 2) & 1, b2 = (k >> 1) & 1, b3 = k & 1;
        for (auto &t : pattern(b1, b2, b3)) {
            auto labels = spin::ground_labels(k);
            for (auto &[site, l] : t.overrides) labels[site - 1] = l;
            v += amps(k) * t.weight * product_state(labels).amp;
        }
    }
    StateVector s{spin::kSites, v};
    return s.normalize();
}

inline SiteLabel xl(int bar) { return {'x', bar != 0}; }
inline SiteLabel yl(int bar) { return {'y', bar != 0}; }
inline SiteLabel zl(int bar) { return {'z', bar != 0}; }

// Sites 5, 6, 7 of the four product states that appear once Y5Z6X7 is on.
inline std::map<int, SiteLabel> chain2_pattern(int p) {
    static const int bars[4][3] = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    return {{5, yl(bars[p][0])}, {6, zl(bars[p][1])}, {7, xl(bars[p][2])}};
}

// Coefficient of pattern p from the b2 = 0 and b2 = 1 amplitudes.
inline std::complex<double> chain2_weight(int p, int b2) {
    const std::complex<double> i(0, 1);
    static const std::complex<double> w[4][2] = {{1.0, -i}, {i, 1.0}, {-i, 1.0}, {-1.0, -i}};
    return w[p][b2];
}

inline Pattern chain2_mixed(std::array<std::complex<double>, 4> m0, std::array<std::complex<double>, 4> m1,
                            std::function<std::map<int, SiteLabel>(int)> site8) {
    return [=](int, int b2, int b3) {
        std::vector<Piece> out;
        for (int p = 0; p < 4; p++) {
            auto o = chain2_pattern(p);
            o[4] = zl(1);
            for (auto &[s, l] : site8(p)) o[s] = l;
            out.push_back({chain2_weight(p, b2) * (b3 ? m1 : m0)[p], o});
        }
        return out;
    };
}

}  // namespace detail

struct NamedState {
    std::string label;
    StateVector state;
};

/// phi1, phi2, phi3, phi4', phi4 of the s1 schedule.
inline std::vector<NamedState> sigma1_states(const Eigen::VectorXcd &a) {
    using namespace detail;
    const std::complex<double> i(0, 1);
    auto pick = [](std::array<std::complex<double>, 4> w) {
        return [w](int b1, int b2) { return w[2 * b1 + b2]; };
    };
    auto w2 = pick({i, 1.0, -1.0, -i});
    auto w3 = pick({1.0, -i, -i, 1.0});
    auto w4p = pick({1.0, -i, i, -1.0});
    auto w4 = pick({1.0, i, i, 1.0});
    return {
        {"phi1", assemble(a, [](int b1, int, int) { return std::vector<Piece>{{b1 ? -1.0 : 1.0, {{3, xl(b1)}}}}; })},
        {"phi2", assemble(a, [=](int b1, int b2, int) {
             return std::vector<Piece>{{w2(b1, b2), {{3, xl(b1)}, {4, yl(1 - b1)}}}};
         })},
        {"phi3", assemble(a, [=](int b1, int b2, int) {
             return std::vector<Piece>{{w3(b1, b2), {{3, xl(b1)}, {4, zl(1)}}}};
         })},
        {"phi4'", assemble(a, [=](int b1, int b2, int) { return std::vector<Piece>{{w4p(b1, b2), {{4, zl(1)}}}}; })},
        {"phi4", assemble(a, [=](int b1, int b2, int) { return std::vector<Piece>{{w4(b1, b2), {}}}; })},
    };
}

/// psi1..psi5 of the s2^-1 schedule.
inline std::vector<NamedState> sigma2_inv_states(const Eigen::VectorXcd &a) {
    using namespace detail;
    const std::complex<double> i(0, 1);
    const std::complex<double> one = 1.0;
    Eigen::VectorXcd c5(8);
    c5 << a(0) - a(2), a(1) + a(3), a(0) + a(2), -(a(1) - a(3)), a(4) - a(6), a(5) + a(7), a(4) + a(6),
        -(a(5) - a(7));
    StateVector psi5 = spin::ground_basis().combine(c5);
    psi5.normalize();
    return {
        {"psi1", assemble(a, [](int, int b2, int) { return std::vector<Piece>{{b2 ? -1.0 : 1.0, {{4, zl(1)}}}}; })},
        {"psi2", assemble(a, chain2_mixed({one, one, one, one}, {one, one, one, one},
                                          [](int) { return std::map<int, SiteLabel>{}; }))},
        {"psi3", assemble(a, chain2_mixed({i, i, one, one}, {one, one, i, i},
                                          [](int p) { return std::map<int, SiteLabel>{{8, yl(p < 2)}}; }))},
        {"psi4", assemble(a, chain2_mixed({one, one, i, i}, {-i, -i, -one, -one},
                                          [](int) { return std::map<int, SiteLabel>{{8, zl(1)}}; }))},
        {"psi5", psi5},
    };
}

}  // namespace mjones::reference

#endif
