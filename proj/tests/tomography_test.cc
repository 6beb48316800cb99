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


#include "mjones/tomography.hpp"

#include <random>

#include "gtest/gtest.h"

#include "mjones/reference.hpp"
#include "mjones/spin.hpp"

using namespace mjones;

namespace {

const cplx kI(0, 1);

CMatrix id(int d) { return CMatrix::Identity(d, d); }

CMatrix xx_gate(double sign) {
    return (id(4) + sign * kI * pauli_operator("XX")) / std::sqrt(2.0);
}

CMatrix random_unitary(int d, std::mt19937 &rng) {
    std::normal_distribution<double> nd;
    CMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) m(r, c) = {nd(rng), nd(rng)};
    }
    Eigen::HouseholderQR<CMatrix> qr(m);
    return qr.householderQ() * id(d);
}

}  // namespace

TEST(pauli_basis, labels_and_operators) {
    auto l = pauli_labels(2);
    ASSERT_EQ(l.size(), 16u);
    EXPECT_EQ(l[0], "II");
    EXPECT_EQ(l[1], "IX");
    EXPECT_EQ(l[4], "XI");
    EXPECT_EQ(l[15], "ZZ");
    EXPECT_EQ(pauli_labels(0), std::vector<std::string>{""});
    EXPECT_LT((pauli_operator("XY") - kron(pauli_matrix('X'), pauli_matrix('Y'))).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_THROW(pauli_matrix('Q'), std::invalid_argument);
    EXPECT_EQ(qubits_of(id(8)), 3);
    EXPECT_THROW(qubits_of(id(6)), std::invalid_argument);
}

TEST(pauli_basis, coefficients) {
    auto c = pauli_coefficients(id(4));
    EXPECT_NEAR(std::abs(c(0) - 1.0), 0, 1e-15);
    EXPECT_NEAR(c.tail(15).norm(), 0, 1e-15);

    auto g = pauli_coefficients(xx_gate(+1));
    EXPECT_NEAR(std::abs(g(0) - 1 / std::sqrt(2.0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(g(5) - kI / std::sqrt(2.0)), 0, 1e-15);  // XX
    EXPECT_NEAR(g.squaredNorm(), 1, 1e-14);

    CMatrix yx = kron(id(2), (id(4) - kI * pauli_operator("YX")) / std::sqrt(2.0));
    auto h = pauli_coefficients(yx);
    ASSERT_EQ(h.size(), 64);
    auto labels = pauli_labels(3);
    for (int m = 0; m < 64; m++) {
        cplx want = labels[m] == "III" ? cplx(1 / std::sqrt(2.0)) : labels[m] == "IYX" ? -kI / std::sqrt(2.0) : 0.0;
        EXPECT_NEAR(std::abs(h(m) - want), 0, 1e-15) << labels[m];
    }

    EXPECT_THROW(pauli_coefficients(2 * id(2)), std::invalid_argument);
    EXPECT_THROW(pauli_coefficients(id(16)), std::invalid_argument);
}

TEST(chi_matrix, gate_examples) {
    auto chi = chi_from_unitary(xx_gate(+1));
    EXPECT_NEAR(std::abs(chi.at("II", "II") - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi.at("XX", "XX") - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi.at("XX", "II") - 0.5 * kI), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi.at("II", "XX") + 0.5 * kI), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi.at("ZZ", "II")), 0, 1e-15);

    auto minus = chi_from_unitary(xx_gate(-1));
    EXPECT_NEAR(std::abs(minus.at("XX", "II") + 0.5 * kI), 0, 1e-15);
    EXPECT_NEAR(process_fidelity(chi, minus), 0, 1e-15);
    EXPECT_NEAR(process_fidelity(chi, chi), 1, 1e-14);
    EXPECT_THROW(chi.at("XQ", "II"), std::out_of_range);
    EXPECT_THROW(chi_from_unitary(id(8)), std::invalid_argument);
}

TEST(chi_matrix, physical_and_phase_invariant) {
    std::mt19937 rng(71);
    for (int t = 0; t < 20; t++) {
        CMatrix u = random_unitary(4, rng);
        auto a = chi_from_unitary(u);
        auto b = chi_from_unitary(std::polar(1.0, 0.1 * t) * u);
        EXPECT_LT((a.chi - b.chi).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_NEAR(std::abs(a.chi.trace() - 1.0), 0, 1e-13);
        EXPECT_LT((a.chi - a.chi.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
        Eigen::SelfAdjointEigenSolver<CMatrix> es(a.chi);
        EXPECT_GT(es.eigenvalues().minCoeff(), -1e-13);
        EXPECT_LT(distance_up_to_phase(unitary_from_chi(a), u), 1e-12);
    }
}

TEST(distances, phase_and_scalar) {
    std::mt19937 rng(72);
    CMatrix u = random_unitary(4, rng);
    EXPECT_LT(distance_up_to_phase(std::polar(1.0, 2.0) * u, u), 1e-14);
    EXPECT_GT(distance_up_to_phase(2.0 * u, u), 0.5);
    EXPECT_LT(distance_up_to_scalar(2.0 * u, u), 1e-14);
    EXPECT_GT(distance_up_to_phase(u, random_unitary(4, rng)), 1e-3);
}

TEST(states, density_matrix_and_fidelity) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
    psi(0) = 1 / std::sqrt(2.0);
    psi(6) = kI / std::sqrt(2.0);
    CMatrix rho = density_matrix(psi);
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho(0, 6) + 0.5 * kI), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho(6, 0) - 0.5 * kI), 0, 1e-15);
    EXPECT_NEAR(std::abs((rho * rho).trace() - 1.0), 0, 1e-15);
    EXPECT_NEAR(state_fidelity(rho, psi), 1, 1e-15);
    Eigen::VectorXcd other = psi;
    other(6) = -other(6);
    EXPECT_NEAR(state_fidelity(rho, other), 0, 1e-15);
}

TEST(states, trefoil_final_state) {
    auto s = spin::run_word(parse_braid("s1 s1 s1"), spin::logical_zero_state());
    CMatrix rho = density_matrix(spin::logical_state(s));
    EXPECT_NEAR(state_fidelity(rho, reference::final_states()[1]), 1, 1e-10);
    EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-10);
}

TEST(two_qubit_factor, split_and_residual) {
    std::mt19937 rng(73);
    CMatrix f = random_unitary(4, rng);
    double res = -1;
    EXPECT_LT((two_qubit_factor(kron(f, id(2)), 2, &res) - f).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(res, 1e-15);
    EXPECT_LT((two_qubit_factor(kron(id(2), f), 0, &res) - f).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(res, 1e-15);
    two_qubit_factor(kron(id(2), f), 2, &res);
    EXPECT_GT(res, 1e-3);
    EXPECT_THROW(two_qubit_factor(id(8), 1), std::invalid_argument);
    EXPECT_THROW(two_qubit_factor(id(4), 0), std::invalid_argument);
}

TEST(two_qubit_factor, simulated_logical_gates) {
    double res = -1;
    auto l1 = spin::extract_braid_matrix(spin::Braid::sigma1).logical;
    auto f1 = two_qubit_factor(l1, 2, &res);
    EXPECT_LT(res, 1e-12);
    EXPECT_LT(distance_up_to_phase(f1, xx_gate(-1)), 1e-12);

    auto l2 = spin::extract_braid_matrix(spin::Braid::sigma2_inv).logical;
    auto f2 = two_qubit_factor(l2, 0, &res);
    EXPECT_LT(res, 1e-12);
    EXPECT_LT(distance_up_to_phase(kron(id(2), f2), reference::stated_l_sigma2_inv()), 1e-12);
}
