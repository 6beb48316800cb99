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

#ifndef MJONES_SPIN_HPP
#define MJONES_SPIN_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mjones/braid.hpp"
#include "mjones/pauli.hpp"
#include "mjones/state.hpp"

namespace mjones::spin {

inline constexpr int kSites = 10;
inline constexpr double kDefaultTau = 20.0;

struct Hamiltonian {
    std::string label;
    std::vector<PauliTerm> terms;
};

namespace detail {

inline std::vector<PauliTerm> parse_terms(std::initializer_list<const char *> ts) {
    std::vector<PauliTerm> out;
    for (const char *t : ts) out.push_back(parse_term(t));
    return out;
}

inline const std::vector<std::pair<std::string, std::vector<std::string>>> &spin_table() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> t = {
        {"H0", {"-X1X2", "-X4X5", "-X5X6", "-X8X9", "-X9X10", "+Z3", "+Z7"}},
        {"H1", {"-X1X2", "-X2X3", "-X4X5", "-X5X6", "-X8X9", "-X9X10", "+Z7"}},
        {"H2", {"-X1X2", "-X2X3", "+X3Y4", "-X5X6", "-X8X9", "-X9X10", "+Z7"}},
        {"H3", {"-X1X2", "-X2X3", "-X5X6", "-X8X9", "-X9X10", "+Z4", "+Z7"}},
        {"H'1", {"-X1X2", "-X5X6", "-X8X9", "-X9X10", "+Z3", "+Z4", "+Z7"}},
        {"H'2", {"-X1X2", "-X5X6", "-Y5Z6X7", "-X9X10", "+Z3", "+Z4", "+Z8"}},
        {"H'3", {"-X1X2", "-X5X6", "-Y5Z6X7", "+X7Y8", "-X9X10", "+Z3", "+Z4"}},
        {"H'4", {"-X1X2", "-X5X6", "-Y5Z6X7", "-X8X9", "-X9X10", "+Z3", "+Z4"}},
        {"H'5", {"-X1X2", "-X5X6", "-X8X9", "-X9X10", "+Z3", "+Z4", "+Z7"}},
    };
    return t;
}

// Pairs of Majorana labels; each Hamiltonian is i * sum(gamma gamma).
inline const std::vector<std::pair<std::string, std::vector<std::string>>> &fermion_table() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> t = {
        {"HM0", {"1b2a", "4b5a", "5b6a", "8b9a", "9b10a", "3a3b", "7a7b"}},
        {"HM1", {"1b2a", "2b3a", "4b5a", "5b6a", "8b9a", "9b10a", "7a7b"}},
        {"HM2", {"1b2a", "2b3a", "3b4b", "5b6a", "8b9a", "9b10a", "7a7b"}},
        {"HM3", {"1b2a", "2b3a", "5b6a", "8b9a", "9b10a", "4a4b", "7a7b"}},
        {"H'M1", {"1b2a", "5b6a", "8b9a", "9b10a", "3a3b", "4a4b", "7a7b"}},
        {"H'M2", {"1b2a", "5a7a", "5b6a", "9b10a", "3a3b", "4a4b", "8a8b"}},
        {"H'M3", {"1b2a", "5a7a", "5b6a", "7b8b", "9b10a", "3a3b", "4a4b"}},
        {"H'M4", {"1b2a", "5a7a", "5b6a", "8b9a", "9b10a", "3a3b", "4a4b"}},
        {"H'M5", {"1b2a", "5b6a", "8b9a", "9b10a", "3a3b", "4a4b", "7a7b"}},
    };
    return t;
}

}  // namespace detail

inline std::vector<std::string> spin_labels() {
    std::vector<std::string> out;
    for (auto &[k, v] : detail::spin_table()) out.push_back(k);
    return out;
}

inline std::vector<std::string> fermionic_labels() {
    std::vector<std::string> out;
    for (auto &[k, v] : detail::fermion_table()) out.push_back(k);
    return out;
}

/// Spin partner of a fermionic label: HM1 -> H1, H'M4 -> H'4.
inline std::string spin_partner(const std::string &fermionic) {
    std::string s = fermionic;
    auto p = s.find('M');
    if (p == std::string::npos) throw std::invalid_argument("not a fermionic label: " + fermionic);
    return s.erase(p, 1);
}

inline Hamiltonian spin_hamiltonian(const std::string &label) {
    for (auto &[k, v] : detail::spin_table()) {
        if (k == label) {
            Hamiltonian h{k, {}};
            for (auto &t : v) h.terms.push_back(parse_term(t));
            return h;
        }
    }
    throw std::invalid_argument("unknown spin Hamiltonian '" + label + "'");
}

enum class Flavor { a, b };

/// Signs applied to every gamma_a and gamma_b. The default is the textbook
/// Jordan-Wigner form gamma_ja = Z..Z X_j, gamma_jb = Z..Z Y_j.
struct JwConvention {
    int a_sign = 1;
    int b_sign = 1;
};

inline PauliString majorana(int site, Flavor f, JwConvention conv = {}, int n = kSites) {
    if (site < 1 || site > n) throw std::out_of_range("Majorana site " + std::to_string(site) + " outside 1.." + std::to_string(n));
    PauliString p = PauliString::identity(n);
    for (int s = 1; s < site; s++) p = p * PauliString::single(n, s, 'z');
    p = p * PauliString::single(n, site, f == Flavor::a ? 'x' : 'y');
    int sign = f == Flavor::a ? conv.a_sign : conv.b_sign;
    return sign < 0 ? p.scaled_by_i(2) : p;
}

/// Parses "3b4b" into two Majorana operators.
inline std::pair<PauliString, PauliString> majorana_pair(const std::string &text, JwConvention conv = {}) {
    std::vector<std::pair<int, Flavor>> ops;
    size_t i = 0;
    while (i < text.size()) {
        size_t b = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
        if (b == i || i == text.size() || (text[i] != 'a' && text[i] != 'b')) {
            throw std::invalid_argument("bad Majorana pair '" + text + "'");
        }
        ops.emplace_back(std::stoi(text.substr(b, i - b)), text[i] == 'a' ? Flavor::a : Flavor::b);
        i++;
    }
    if (ops.size() != 2) throw std::invalid_argument("bad Majorana pair '" + text + "'");
    return {majorana(ops[0].first, ops[0].second, conv), majorana(ops[1].first, ops[1].second, conv)};
}

/// The fermionic Hamiltonian, expanded into Pauli terms through the
/// Majorana products i * gamma_p gamma_q.
inline Hamiltonian fermionic_hamiltonian(const std::string &label, JwConvention conv = {}) {
    for (auto &[k, v] : detail::fermion_table()) {
        if (k == label) {
            Hamiltonian h{k, {}};
            for (auto &pair : v) {
                auto [g1, g2] = majorana_pair(pair, conv);
                h.terms.push_back(PauliTerm::from_hermitian((g1 * g2).scaled_by_i(1)));
            }
            return h;
        }
    }
    throw std::invalid_argument("unknown fermionic Hamiltonian '" + label + "'");
}

inline bool terms_commute(const Hamiltonian &h, int n = kSites) {
    for (size_t i = 0; i < h.terms.size(); i++) {
        for (size_t j = i + 1; j < h.terms.size(); j++) {
            if (!h.terms[i].to_string_op(n).commutes_with(h.terms[j].to_string_op(n))) return false;
        }
    }
    return true;
}

inline Eigen::VectorXcd apply(const Hamiltonian &h, const Eigen::VectorXcd &v, int n = kSites) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (auto &t : h.terms) out += t.coefficient * mjones::apply(t.to_string_op(n), v);
    return out;
}

inline double energy(const Hamiltonian &h, const StateVector &s) { return s.amp.dot(apply(h, s.amp, s.qubits)).real(); }

/// Full 2^n x 2^n matrix. Verification use only.
inline Eigen::MatrixXcd dense_matrix(const Hamiltonian &h, int n = kSites) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (auto &t : h.terms) {
        PauliString p = t.to_string_op(n);
        for (uint32_t b = 0; b < dim; b++) {
            double s = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
            m(b ^ p.x, b) += t.coefficient * s * p.phase_factor();
        }
    }
    return m;
}

/// Sorted eigenvalues. Every term maps a basis state to one basis state, so
/// the matrix splits into blocks along orbits of the X masks; each block is
/// diagonalized densely.
inline std::vector<double> spectrum(const Hamiltonian &h, int n = kSites) {
    const uint32_t dim = uint32_t{1} << n;
    std::vector<PauliString> ops;
    for (auto &t : h.terms) ops.push_back(t.to_string_op(n));

    std::vector<int> block(dim, -1);
    std::vector<std::vector<uint32_t>> members;
    for (uint32_t s = 0; s < dim; s++) {
        if (block[s] >= 0) continue;
        int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<uint32_t> stack{s};
        block[s] = id;
        while (!stack.empty()) {
            uint32_t b = stack.back();
            stack.pop_back();
            members[id].push_back(b);
            for (auto &p : ops) {
                uint32_t c = b ^ p.x;
                if (block[c] < 0) {
                    block[c] = id;
                    stack.push_back(c);
                }
            }
        }
    }

    std::vector<double> evs;
    evs.reserve(dim);
    std::vector<int> local(dim);
    for (auto &mem : members) {
        std::sort(mem.begin(), mem.end());
        for (size_t i = 0; i < mem.size(); i++) local[mem[i]] = static_cast<int>(i);
        const auto m = static_cast<Eigen::Index>(mem.size());
        Eigen::MatrixXcd blk = Eigen::MatrixXcd::Zero(m, m);
        for (size_t t = 0; t < ops.size(); t++) {
            for (uint32_t b : mem) {
                double s = (std::popcount(ops[t].z & b) & 1) ? -1.0 : 1.0;
                blk(local[b ^ ops[t].x], local[b]) += h.terms[t].coefficient * s * ops[t].phase_factor();
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blk, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < m; i++) evs.push_back(es.eigenvalues()(i));
    }
    std::sort(evs.begin(), evs.end());
    return evs;
}

// ---------------------------------------------------------------------------
// Ground space of H0 and the logical encoding.

inline const std::array<const char *, 8> &ground_names() {
    static const std::array<const char *, 8> n = {"alpha", "beta", "gamma", "delta", "eta", "kappa", "mu", "nu"};
    return n;
}

/// Site labels of ground vector k = (b1 b2 b3): sites 1-2 follow b1,
/// 4-6 follow b2, 8-10 follow b3 (x or xbar); sites 3 and 7 are zbar.
inline std::vector<SiteLabel> ground_labels(int k) {
    bool b1 = (k >> 2) & 1, b2 = (k >> 1) & 1, b3 = k & 1;
    return {{'x', b1}, {'x', b1}, {'z', true}, {'x', b2}, {'x', b2},
            {'x', b2}, {'z', true}, {'x', b3}, {'x', b3}, {'x', b3}};
}

struct GroundBasis {
    std::array<StateVector, 8> v;

    Eigen::MatrixXcd matrix() const {
        Eigen::MatrixXcd m(v[0].amp.size(), 8);
        for (int k = 0; k < 8; k++) m.col(k) = v[k].amp;
        return m;
    }
    Eigen::VectorXcd coordinates(const StateVector &s) const { return matrix().adjoint() * s.amp; }
    StateVector combine(const Eigen::VectorXcd &c) const { return {kSites, matrix() * c}; }
    double weight(const StateVector &s) const { return coordinates(s).squaredNorm(); }
};

inline const GroundBasis &ground_basis() {
    static const GroundBasis g = [] {
        GroundBasis b;
        for (int k = 0; k < 8; k++) b.v[k] = product_state(ground_labels(k));
        return b;
    }();
    return g;
}

/// Columns map ground coordinates to logical amplitudes. Chain 1 sends
/// x -> |+>, xbar -> |->; chains 2 and 3 send x -> |+>, xbar -> -|->.
inline Eigen::MatrixXcd encoding_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Vector2d first[2] = {{r, r}, {r, -r}};
    Eigen::Vector2d rest[2] = {{r, r}, {-r, r}};
    Eigen::MatrixXcd e(8, 8);
    for (int k = 0; k < 8; k++) {
        int b1 = (k >> 2) & 1, b2 = (k >> 1) & 1, b3 = k & 1;
        for (int l = 0; l < 8; l++) {
            e(l, k) = first[b1]((l >> 2) & 1) * rest[b2]((l >> 1) & 1) * rest[b3](l & 1);
        }
    }
    return e;
}

inline void require_normalized(const Eigen::VectorXcd &v, double tol = 1e-10) {
    if (std::abs(v.norm() - 1.0) > tol) throw std::invalid_argument("input vector is not normalized");
}

inline Eigen::VectorXcd logical_encode(const Eigen::VectorXcd &ground_amplitudes) {
    if (ground_amplitudes.size() != 8) throw std::invalid_argument("expected 8 ground amplitudes");
    require_normalized(ground_amplitudes);
    return encoding_matrix() * ground_amplitudes;
}

inline Eigen::VectorXcd logical_decode(const Eigen::VectorXcd &logical) {
    if (logical.size() != 8) throw std::invalid_argument("expected 8 logical amplitudes");
    require_normalized(logical);
    return encoding_matrix().adjoint() * logical;
}

/// Ground state encoding logical |000>.
inline StateVector logical_zero_state() {
    Eigen::VectorXcd l = Eigen::VectorXcd::Zero(8);
    l(0) = 1;
    return ground_basis().combine(logical_decode(l));
}

// ---------------------------------------------------------------------------
// Imaginary-time evolution and cooling.

class DegenerateEvolution : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// normalize(exp(-tau * term) psi). Uses exp(-tau c P) with P^2 = 1, scaled so
/// the surviving eigenspace keeps unit weight.
inline StateVector ite_apply(const StateVector &s, const PauliTerm &term, double tau) {
    if (tau < 0) throw std::invalid_argument("tau must be non-negative");
    PauliString p = term.to_string_op(s.qubits);
    if (!p.is_hermitian()) throw std::invalid_argument("term is not Hermitian");
    double c = term.coefficient;
    if (c < 0) {
        p = p.scaled_by_i(2);
        c = -c;
    }
    double f = std::exp(-2 * tau * c);
    Eigen::VectorXcd out = 0.5 * (1 + f) * s.amp - 0.5 * (1 - f) * mjones::apply(p, s.amp);
    if (out.norm() < 1e-12) throw DegenerateEvolution("state has no weight in the surviving eigenspace");
    StateVector r{s.qubits, out};
    return r.normalize();
}

struct CoolingResult {
    StateVector state;
    double retained_weight;  // |P_g psi|^2 + |kept excited|^2 + |moved|^2
    double excited_residual;  // weight left in the excited space after normalization
};

inline void check_pairing(const PauliString &t, const PauliString &s) {
    if (!t.is_hermitian() || !s.is_hermitian()) throw std::invalid_argument("cooling operators must be Hermitian");
    if (t.commutes_with(s)) {
        throw std::invalid_argument("pairing does not map the excited space onto the ground space (it commutes with the term)");
    }
}

/// Non-dissipative cooling on one +-1 term. The ITE factor e^{-2 tau} keeps
/// part of the excited component in place; the rest is moved into the ground
/// space by the pairing S. At large tau this is P_g psi + S P_e psi.
inline CoolingResult cooling_step(const StateVector &s, const PauliTerm &term, const PauliTerm &pairing,
                                  double tau = kDefaultTau) {
    PauliString t = term.signed_op(s.qubits);
    PauliString p = pairing.signed_op(s.qubits);
    check_pairing(t, p);
    Eigen::VectorXcd tpsi = mjones::apply(t, s.amp);
    Eigen::VectorXcd g = 0.5 * (s.amp - tpsi);
    Eigen::VectorXcd e = 0.5 * (s.amp + tpsi);
    double f = std::exp(-2 * tau);
    Eigen::VectorXcd kept = f * e;
    Eigen::VectorXcd moved = std::sqrt(1 - f * f) * mjones::apply(p, e);
    double retained = g.squaredNorm() + kept.squaredNorm() + moved.squaredNorm();
    Eigen::VectorXcd out = g + kept + moved;
    if (out.norm() < 1e-12) throw DegenerateEvolution("cooled state vanished");
    StateVector r{s.qubits, out};
    r.normalize();
    Eigen::VectorXcd exc = 0.5 * (r.amp + mjones::apply(t, r.amp));
    return {r, retained, exc.squaredNorm()};
}

/// Coordinate change from the eigenbasis of `from` to that of `to` on one
/// site: amplitudes over (|from>, |from-bar>) become amplitudes over
/// (|to>, |to-bar>).
inline Eigen::Matrix2cd rotation_matrix(char from, char to) {
    Eigen::Matrix2cd vf, vt;
    vf << axis_eigenvector(from, false), axis_eigenvector(from, true);
    vt << axis_eigenvector(to, false), axis_eigenvector(to, true);
    return vt.adjoint() * vf;
}

inline StateVector basis_rotation(const StateVector &s, int site, char from, char to) {
    if (from == to) throw std::invalid_argument("rotation needs two different axes");
    return apply_single(rotation_matrix(from, to), site, s);
}

// ---------------------------------------------------------------------------
// Braiding schedules.

enum class Braid { sigma1, sigma1_inv, sigma2, sigma2_inv };

inline const char *braid_name(Braid b) {
    switch (b) {
        case Braid::sigma1:
            return "s1";
        case Braid::sigma1_inv:
            return "s1^-1";
        case Braid::sigma2:
            return "s2";
        case Braid::sigma2_inv:
            return "s2^-1";
    }
    return "?";
}

inline Braid braid_from_letter(int g) {
    switch (g) {
        case 1:
            return Braid::sigma1;
        case -1:
            return Braid::sigma1_inv;
        case 2:
            return Braid::sigma2;
        case -2:
            return Braid::sigma2_inv;
        default:
            throw std::out_of_range("the spin protocol realizes s1 and s2 only");
    }
}

struct CoolStep {
    PauliTerm term;
    PauliTerm pairing;
    std::string label;  // name of the resulting state, empty if unnamed
};

/// Each step cools onto one new term of the next Hamiltonian. The pairing is
/// minus the term that leaves the Hamiltonian; it anticommutes with the new
/// term and fixes the incoming state.
inline std::vector<CoolStep> cooling_steps(Braid b) {
    auto s = [](const char *t, const char *p, const char *l) { return CoolStep{parse_term(t), parse_term(p), l}; };
    switch (b) {
        case Braid::sigma1:  // H0 -> H1 -> H2 -> H3 -> H0
            return {s("-X2X3", "-Z3", "phi1"), s("+X3Y4", "+X4X5", "phi2"), s("+Z4", "-X3Y4", "phi3"),
                    s("+Z3", "+X2X3", "phi4'"), s("-X4X5", "-Z4", "phi4")};
        case Braid::sigma1_inv:  // H0 -> H1 -> H3 -> H2 -> H1 -> H0
            return {s("-X2X3", "-Z3", ""), s("+Z4", "+X4X5", ""), s("+X3Y4", "-Z4", ""), s("-X4X5", "-X3Y4", ""),
                    s("+Z3", "+X2X3", "")};
        case Braid::sigma2:  // H0 -> H'5 -> . -> H'2 -> H'3 -> H'4 -> H'5 -> H0
            return {s("+Z4", "+X4X5", ""),      s("+Z8", "+X8X9", ""),   s("-Y5Z6X7", "-Z7", ""),
                    s("+X7Y8", "-Z8", ""),      s("-X8X9", "-X7Y8", ""), s("+Z7", "+Y5Z6X7", ""),
                    s("-X4X5", "-Z4", "")};
        case Braid::sigma2_inv:  // H0 -> H'5 -> H'4 -> H'3 -> H'2 -> . -> H'1 -> H0
            return {s("+Z4", "+X4X5", "psi1"),    s("-Y5Z6X7", "-Z7", "psi2"), s("+X7Y8", "+X8X9", "psi3"),
                    s("+Z8", "-X7Y8", "psi4"),    s("+Z7", "+Y5Z6X7", ""),     s("-X8X9", "-Z8", "psi5'"),
                    s("-X4X5", "-Z4", "psi5")};
    }
    return {};
}

struct ScheduleStep {
    enum class Kind { rotate, cool };
    Kind kind;
    int site = 0;
    char from = 0;
    char to = 0;
    CoolStep cool;
};

/// Cooling steps with the single-site frame changes that precede them. The
/// frame starts at z on sites 3 and 7 and x elsewhere. Rotations change the
/// basis the state is written in, not the state.
inline std::vector<ScheduleStep> schedule(Braid b) {
    std::array<char, kSites + 1> frame;
    frame.fill('x');
    frame[3] = frame[7] = 'z';
    std::vector<ScheduleStep> out;
    for (auto &c : cooling_steps(b)) {
        for (auto [site, axis] : c.term.factors) {
            char a = static_cast<char>(std::tolower(axis));
            if (frame[site] != a) {
                out.push_back({ScheduleStep::Kind::rotate, site, frame[site], a, {}});
                frame[site] = a;
            }
        }
        out.push_back({ScheduleStep::Kind::cool, 0, 0, 0, c});
    }
    return out;
}

struct SequenceOptions {
    double tau = kDefaultTau;
    double precondition_tolerance = 1e-8;
};

struct SequenceResult {
    StateVector state;
    std::vector<std::pair<std::string, StateVector>> intermediates;
    double min_retained_weight = 1.0;
    double max_excited_residual = 0.0;
};

class PreconditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline SequenceResult braid_sequence(Braid b, const StateVector &input, const SequenceOptions &opt = {}) {
    if (input.qubits != kSites) throw std::invalid_argument("braid sequences act on 10 sites");
    double outside = 1.0 - ground_basis().weight(input);
    if (outside > opt.precondition_tolerance) {
        throw PreconditionError(std::string(braid_name(b)) + ": input has weight " + std::to_string(outside) +
                                " outside the ground space of H0");
    }
    SequenceResult r{input, {}, 1.0, 0.0};
    for (auto &step : cooling_steps(b)) {
        auto c = cooling_step(r.state, step.term, step.pairing, opt.tau);
        r.state = c.state;
        r.min_retained_weight = std::min(r.min_retained_weight, c.retained_weight);
        r.max_excited_residual = std::max(r.max_excited_residual, c.excited_residual);
        r.intermediates.emplace_back(step.label, r.state);
    }
    return r;
}

/// Runs a link word letter by letter (s1, s1^-1, s2, s2^-1).
inline StateVector run_word(const BraidWord &w, const StateVector &input, const SequenceOptions &opt = {}) {
    StateVector s = input;
    for (int g : w.letters) s = braid_sequence(braid_from_letter(g), s, opt).state;
    return s;
}

struct BraidMatrices {
    Eigen::MatrixXcd ground;   // 8x8 in GroundBasis coordinates
    Eigen::MatrixXcd logical;  // 8x8 on (chain1, chain2, chain3)
};

inline BraidMatrices extract_braid_matrix(Braid b, const SequenceOptions &opt = {}) {
    const auto &gb = ground_basis();
    Eigen::MatrixXcd u(8, 8);
    for (int k = 0; k < 8; k++) u.col(k) = gb.coordinates(braid_sequence(b, gb.v[k], opt).state);
    Eigen::MatrixXcd e = encoding_matrix();
    return {u, e * u * e.adjoint()};
}

/// Logical amplitudes of a 10-site state (projected on the ground space).
inline Eigen::VectorXcd logical_state(const StateVector &s) {
    Eigen::VectorXcd c = ground_basis().coordinates(s);
    return encoding_matrix() * c;
}

// ---------------------------------------------------------------------------
// Ancilla form of the cooling step.

struct AncillaResult {
    StateVector system;      // after recombining the ancilla branches
    double total_norm;       // norm of the 11-qubit state before recombination
    double branch0_weight;   // weight on ancilla |0>
    double branch1_weight;   // weight on ancilla |1>
};

/// Hadamard, controlled exp(-i T t), R(alpha) = diag(1, -i e^{i alpha}),
/// Hadamard, then the pairing controlled on ancilla |1>. The ancilla is site 1
/// of an (n+1)-qubit register. For a +-1 term, t = pi/2 and alpha = 0 split
/// the register into |0> P_g psi + |1> P_e psi.
inline AncillaResult ancilla_cooling(const StateVector &s, const PauliTerm &term, const PauliTerm &pairing,
                                     double t = std::numbers::pi / 2, double alpha = 0.0) {
    const int n = s.qubits + 1;
    if (n > kMaxQubits) throw std::invalid_argument("ancilla register exceeds the qubit limit");
    auto shift = [](const PauliTerm &p) {
        PauliTerm q{p.coefficient, {}};
        for (auto [site, axis] : p.factors) q.factors[site + 1] = axis;
        return q;
    };
    PauliString tt = shift(term).signed_op(n);
    PauliString pp = shift(pairing).signed_op(n);
    check_pairing(tt, pp);
    const uint32_t anc = PauliString::bit(n, 1);
    const std::complex<double> i(0, 1);

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    v.head(s.amp.size()) = s.amp;
    StateVector reg{n, v};

    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    reg = apply_single(h, 1, reg);

    Eigen::VectorXcd tv = mjones::apply(tt, reg.amp);
    for (uint32_t b = 0; b < reg.amp.size(); b++) {
        if (b & anc) reg.amp(b) = std::cos(t) * reg.amp(b) - i * std::sin(t) * tv(b);
    }

    Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
    rz(0, 0) = 1;
    rz(1, 1) = -i * std::polar(1.0, alpha);
    reg = apply_single(rz, 1, reg);
    reg = apply_single(h, 1, reg);

    Eigen::VectorXcd pv = mjones::apply(pp, reg.amp);
    for (uint32_t b = 0; b < reg.amp.size(); b++) {
        if (b & anc) reg.amp(b) = pv(b);
    }

    const auto half = s.amp.size();
    Eigen::VectorXcd b0 = reg.amp.head(half), b1 = reg.amp.tail(half);
    StateVector sys{s.qubits, Eigen::VectorXcd((b0 + b1) / std::sqrt(2.0))};
    if (sys.norm() < 1e-12) throw DegenerateEvolution("ancilla branches cancel");
    sys.normalize();
    return {sys, reg.amp.norm(), b0.squaredNorm(), b1.squaredNorm()};
}

}  // namespace mjones::spin

#endif
