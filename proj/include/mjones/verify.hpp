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

// Cross-validation suite: golden link values, spectra, protocol replay,
// braid matrices, chi matrices and property checks.

#ifndef MJONES_VERIFY_HPP
#define MJONES_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "mjones/anyon.hpp"
#include "mjones/braid.hpp"
#include "mjones/kauffman.hpp"
#include "mjones/reference.hpp"
#include "mjones/spin.hpp"
#include "mjones/tomography.hpp"

namespace mjones {

struct Check {
    std::string name;
    int criterion = 0;  // 1..9, 0 for extra checks
    bool passed = false;
    std::string detail{};
    double seconds = 0;
};

struct VerifyConfig {
    double tau = spin::kDefaultTau;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

inline std::string fmt(std::complex<double> v) { return "(" + fmt(v.real()) + "," + fmt(v.imag()) + ")"; }

class Timer {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

/// Fixed generic ground amplitudes, so every tabulated coefficient is exercised.
inline Eigen::VectorXcd generic_amplitudes() {
    Eigen::VectorXcd a(8);
    for (int k = 0; k < 8; k++) a(k) = std::complex<double>(1.0 + 0.37 * k, 0.5 - 0.21 * k * k);
    return a.normalized();
}

inline double fidelity(const StateVector &a, const StateVector &b) { return amplitude_probability(a, b); }

inline Check five_link_values() {
    Timer t;
    Check c{"five-link golden values", 1};
    double worst_abs = 0, worst_signed = 0;
    for (auto &l : reference::links()) {
        auto w = parse_braid(l.word);
        auto v = jones_su2_2(w, default_pairs(w)).value;
        worst_abs = std::max(worst_abs, std::abs(std::abs(v) - l.abs_value));
        if (l.signed_value) worst_signed = std::max(worst_signed, std::abs(v - *l.signed_value));
    }
    c.seconds = t.seconds();
    c.passed = worst_abs <= 1e-12 && worst_signed <= 1e-9 && c.seconds < 0.1;
    c.detail = "max |V| error " + fmt(worst_abs) + ", max signed error " + fmt(worst_signed) +
               (c.seconds < 0.1 ? ", under 0.1 s" : ", over 0.1 s");
    return c;
}

inline Check amplitudes() {
    Timer t;
    Check c{"vacuum amplitudes", 2};
    double worst = 0;
    std::string vals;
    for (auto &l : reference::links()) {
        auto w = parse_braid(l.word);
        auto j = jones_su2_2(w, default_pairs(w));
        worst = std::max(worst, std::abs(std::abs(j.amplitude) - l.abs_amplitude));
        vals += (vals.empty() ? "" : " ") + fmt(std::abs(j.amplitude));
    }
    c.passed = worst <= 1e-12;
    c.detail = "|amp| = " + vals + ", max error " + fmt(worst);
    c.seconds = t.seconds();
    return c;
}

inline Check oracle_agreement() {
    Timer t;
    Check c{"Kauffman oracle agreement", 3};
    double worst_signed = 0, worst_abs = 0;
    for (auto &l : reference::links()) {
        auto w = parse_braid(l.word);
        auto k = kauffman_at_i(w);
        auto a = jones_su2_2(w, default_pairs(w)).value;
        worst_abs = std::max(worst_abs, std::abs(std::abs(k) - std::abs(a)));
        if (l.signed_value) worst_signed = std::max(worst_signed, std::abs(k - a));
    }
    bool unknot = jones_polynomial(parse_braid("s1")) == Laurent(1);
    c.passed = worst_signed <= 1e-9 && worst_abs <= 1e-9 && unknot;
    c.detail = "max signed diff " + fmt(worst_signed) + ", max |V| diff " + fmt(worst_abs) +
               (unknot ? ", V(unknot) = 1" : ", V(unknot) != 1");
    c.seconds = t.seconds();
    return c;
}

inline Check jordan_wigner() {
    Timer t;
    Check c{"Jordan-Wigner spectra", 4};
    double worst = 0;
    std::string bad;
    const auto labels = spin::fermionic_labels();
    for (auto &label : labels) {
        auto f = spin::spectrum(spin::fermionic_hamiltonian(label));
        auto s = spin::spectrum(spin::spin_hamiltonian(spin::spin_partner(label)));
        double d = f.size() == s.size() ? 0.0 : 1e300;
        for (size_t i = 0; i < std::min(f.size(), s.size()); i++) d = std::max(d, std::abs(f[i] - s[i]));
        worst = std::max(worst, d);
        if (d > 1e-10) bad += " " + label;
    }
    c.seconds = t.seconds();
    c.passed = bad.empty() && c.seconds < 5.0;
    c.detail = std::to_string(labels.size()) + " pairs, max eigenvalue diff " + fmt(worst) + (c.seconds < 5.0 ? ", under 5 s" : ", over 5 s") +
               (bad.empty() ? "" : ", mismatch:" + bad);
    return c;
}

inline Check intermediate_states(const VerifyConfig &cfg) {
    Timer t;
    spin::SequenceOptions opt{cfg.tau};
    Check inter{"intermediate states", 5};
    double worst = 1.0;
    std::string worst_label;
    for (auto a : {reference::initial_amplitudes(), generic_amplitudes()}) {
        auto in = spin::ground_basis().combine(a);
        auto check = [&](spin::Braid b, const std::vector<reference::NamedState> &ref) {
            auto r = spin::braid_sequence(b, in, opt);
            for (auto &[label, s] : r.intermediates) {
                for (auto &n : ref) {
                    if (n.label != label) continue;
                    double f = fidelity(n.state, s);
                    if (f < worst) {
                        worst = f;
                        worst_label = label;
                    }
                }
            }
        };
        check(spin::Braid::sigma1, reference::sigma1_states(a));
        check(spin::Braid::sigma2_inv, reference::sigma2_inv_states(a));
    }
    inter.passed = worst >= 1 - 1e-8;
    inter.detail = "min fidelity " + fmt(worst) + (worst_label.empty() ? "" : " at " + worst_label);
    inter.seconds = t.seconds();
    return inter;
}

inline Check final_states(const VerifyConfig &cfg) {
    Timer t;
    spin::SequenceOptions opt{cfg.tau};
    Check fin{"final states and probabilities", 5};
    auto printed = reference::final_states();
    std::string bad;
    double worst_p = 0;
    for (size_t k = 0; k < reference::links().size(); k++) {
        auto &l = reference::links()[k];
        auto s = spin::run_word(parse_braid(l.word), spin::logical_zero_state(), opt);
        Eigen::VectorXcd lv = spin::logical_state(s);
        double p = std::norm(lv(0));
        worst_p = std::max(worst_p, std::abs(p - l.probability));
        double f = std::norm(printed[k].dot(lv));
        if (f < 1 - 1e-8) bad += " " + l.name + " (fidelity " + fmt(f) + ")";
    }
    fin.passed = bad.empty() && worst_p <= 1e-8;
    fin.detail = "max probability error " + fmt(worst_p) + (bad.empty() ? "" : "; state mismatch:" + bad);
    fin.seconds = t.seconds();
    return fin;
}

inline std::vector<Check> matrix_reconstruction(const VerifyConfig &cfg) {
    spin::SequenceOptions opt{cfg.tau};
    std::vector<Check> out;
    for (auto b : {spin::Braid::sigma1, spin::Braid::sigma2_inv}) {
        Timer t;
        auto m = spin::extract_braid_matrix(b, opt);
        auto p = reference::printed(b);
        double du = b == spin::Braid::sigma1 ? distance_up_to_scalar(m.ground, p.ground)
                                             : distance_up_to_phase(m.ground, p.ground);
        double dl = distance_up_to_phase(m.logical, p.logical);
        auto stated = b == spin::Braid::sigma1 ? reference::stated_l_sigma1() : reference::stated_l_sigma2_inv();
        double ds = distance_up_to_phase(m.logical, stated);
        Check c{std::string("braid matrices ") + spin::braid_name(b), 6};
        c.passed = du <= 1e-8 && dl <= 1e-8 && ds <= 1e-8;
        c.detail = "U deviation " + fmt(du) + ", L deviation " + fmt(dl) + ", closed-form L deviation " + fmt(ds);
        c.seconds = t.seconds();
        out.push_back(c);
    }
    return out;
}

inline Check chi_goldens(const VerifyConfig &cfg) {
    Timer t;
    Check c{"chi matrix of the s1 logical factor", 7};
    auto m = spin::extract_braid_matrix(spin::Braid::sigma1, {cfg.tau});
    double residual = 0;
    CMatrix f = two_qubit_factor(m.logical, 2, &residual);
    try {
        auto chi = chi_from_unitary(f);
        const std::complex<double> i(0, 1);
        double d = std::max({std::abs(chi.at("II", "II") - 0.5), std::abs(chi.at("XX", "XX") - 0.5),
                             std::abs(chi.at("XX", "II") - 0.5 * i)});
        c.passed = d <= 1e-12 && residual <= 1e-12;
        c.detail = "chi(II,II)=" + fmt(chi.at("II", "II")) + " chi(XX,XX)=" + fmt(chi.at("XX", "XX")) +
                   " chi(XX,II)=" + fmt(chi.at("XX", "II")) + ", factor residual " + fmt(residual);
    } catch (const std::invalid_argument &e) {
        c.detail = e.what();
    }
    c.seconds = t.seconds();
    return c;
}

inline double unitarity_error(const CMatrix &u) {
    return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

/// Inserts s_k s_k^-1 (or the reverse) at a random position.
inline BraidWord insert_cancelling_pair(const BraidWord &w, std::mt19937 &rng) {
    std::uniform_int_distribution<int> gen(1, w.strands - 1), sign(0, 1);
    std::uniform_int_distribution<size_t> pos(0, w.letters.size());
    int g = gen(rng) * (sign(rng) ? 1 : -1);
    BraidWord out = w;
    auto at = out.letters.begin() + static_cast<std::ptrdiff_t>(pos(rng));
    out.letters.insert(at, {g, -g});
    return out;
}

inline std::vector<Check> properties(const VerifyConfig &cfg) {
    std::vector<Check> out;
    {
        Timer t;
        double worst = 0;
        for (int pairs : {2, 3}) {
            for (auto &g : braid_generators(pairs)) worst = std::max(worst, unitarity_error(g));
        }
        out.push_back({"generator unitarity", 8, worst <= 1e-12, "max |B^+B - 1| " + fmt(worst), t.seconds()});
    }
    {
        Timer t;
        auto g = braid_generators(3);
        double yb = (g[1] * g[2] * g[1] - g[2] * g[1] * g[2]).cwiseAbs().maxCoeff();
        out.push_back({"Yang-Baxter B2B3B2 = B3B2B3", 8, yb <= 1e-12, "deviation " + fmt(yb), t.seconds()});
        Timer t2;
        double fc = (g[1] * g[3] - g[3] * g[1]).cwiseAbs().maxCoeff();
        out.push_back({"far commutation [B2,B4] = 0", 8, fc <= 1e-12, "deviation " + fmt(fc), t2.seconds()});
    }
    {
        Timer t;
        spin::SequenceOptions opt{cfg.tau};
        double worst_inv = 0, worst_unit = 0;
        using spin::Braid;
        for (auto [b, bi] : {std::pair{Braid::sigma1, Braid::sigma1_inv}, std::pair{Braid::sigma2, Braid::sigma2_inv}}) {
            auto u = spin::extract_braid_matrix(b, opt).ground;
            auto ui = spin::extract_braid_matrix(bi, opt).ground;
            worst_unit = std::max({worst_unit, unitarity_error(u), unitarity_error(ui)});
            CMatrix id = CMatrix::Identity(8, 8);
            worst_inv = std::max({worst_inv, distance_up_to_phase(ui * u, id), distance_up_to_phase(u * ui, id)});
        }
        out.push_back({"sigma sigma^-1 = identity on the ground space", 8, worst_inv <= 1e-8 && worst_unit <= 1e-8,
                       "inverse deviation " + fmt(worst_inv) + ", unitarity deviation " + fmt(worst_unit),
                       t.seconds()});
    }
    {
        Timer t;
        std::mt19937 rng(20260101);
        std::uniform_int_distribution<int> strands(2, 4), len(0, 6), sign(0, 1);
        int failures = 0;
        for (int trial = 0; trial < 200; trial++) {
            BraidWord w;
            w.strands = strands(rng);
            std::uniform_int_distribution<int> gen(1, w.strands - 1);
            int n = len(rng);
            for (int k = 0; k < n; k++) w.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
            if (!(bracket(w) == bracket(insert_cancelling_pair(w, rng)))) failures++;
        }
        out.push_back({"Reidemeister II bracket invariance", 8, failures == 0,
                       std::to_string(200 - failures) + "/200 random words invariant", t.seconds()});
    }
    {
        Timer t;
        double loss = 0, ancilla = 0, norm = 0;
        auto in = spin::ground_basis().combine(generic_amplitudes());
        for (auto b : {spin::Braid::sigma1, spin::Braid::sigma1_inv, spin::Braid::sigma2, spin::Braid::sigma2_inv}) {
            StateVector s = in;
            for (auto &step : spin::cooling_steps(b)) {
                auto c = spin::cooling_step(s, step.term, step.pairing, cfg.tau);
                loss = std::max(loss, std::abs(1 - c.retained_weight));
                norm = std::max(norm, std::abs(1 - c.state.norm()));
                auto anc = spin::ancilla_cooling(s, step.term, step.pairing);
                ancilla = std::max(ancilla, std::abs(1 - anc.total_norm));
                s = c.state;
            }
        }
        out.push_back({"cooling non-dissipation", 8, loss <= 1e-10 && norm <= 1e-12 && ancilla <= 1e-10,
                       "weight loss " + fmt(loss) + ", ancilla register loss " + fmt(ancilla) +
                           ", post-normalization deviation " + fmt(norm),
                       t.seconds()});
    }
    return out;
}

}  // namespace detail

/// Runs every check in a fixed order. The last entry is the end-to-end
/// runtime check.
inline std::vector<Check> run_verify(const VerifyConfig &cfg = {}) {
    if (!(cfg.tau > 0)) throw std::invalid_argument("tau must be positive");
    detail::Timer total;
    std::vector<Check> out;
    // An exception inside a group fails that group instead of aborting the run.
    auto add = [&](int criterion, const char *name, auto &&run) {
        try {
            if constexpr (std::is_same_v<decltype(run()), Check>) {
                out.push_back(run());
            } else {
                for (auto &c : run()) out.push_back(c);
            }
        } catch (const std::exception &e) {
            out.push_back({name, criterion, false, std::string("error: ") + e.what(), 0});
        }
    };
    add(1, "five-link golden values", [] { return detail::five_link_values(); });
    add(2, "vacuum amplitudes", [] { return detail::amplitudes(); });
    add(3, "Kauffman oracle agreement", [] { return detail::oracle_agreement(); });
    add(4, "Jordan-Wigner spectra", [] { return detail::jordan_wigner(); });
    add(5, "intermediate states", [&] { return detail::intermediate_states(cfg); });
    add(5, "final states and probabilities", [&] { return detail::final_states(cfg); });
    add(6, "braid matrices", [&] { return detail::matrix_reconstruction(cfg); });
    add(7, "chi matrix of the s1 logical factor", [&] { return detail::chi_goldens(cfg); });
    add(8, "property suite", [&] { return detail::properties(cfg); });
    double s = total.seconds();
    out.push_back({"end-to-end runtime", 9, s < 10.0, s < 10.0 ? "all checks under 10 s" : "checks took over 10 s", s});
    return out;
}

/// Per-criterion verdicts: a criterion passes iff all of its checks pass.
inline std::map<int, bool> criterion_verdicts(const std::vector<Check> &checks) {
    std::map<int, bool> v;
    for (auto &c : checks) {
        auto [it, fresh] = v.emplace(c.criterion, c.passed);
        if (!fresh) it->second = it->second && c.passed;
    }
    return v;
}

}  // namespace mjones

#endif
