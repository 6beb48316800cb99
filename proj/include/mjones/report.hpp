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

// Per-word reports for the command-line front end, the c1/c3 link table and
// the text, JSON and CSV renderers.

#ifndef MJONES_REPORT_HPP
#define MJONES_REPORT_HPP

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mjones/anyon.hpp"
#include "mjones/braid.hpp"
#include "mjones/kauffman.hpp"
#include "mjones/reference.hpp"
#include "mjones/spin.hpp"
#include "mjones/tomography.hpp"
#include "mjones/verify.hpp"

namespace mjones::report {

using json = nlohmann::ordered_json;

enum class Backend { anyon, spin, kauffman, all };
enum class Format { text, json, csv };

struct RunConfig {
    Backend backend = Backend::all;
    std::optional<int> pairs;
    double tau = spin::kDefaultTau;
    double tolerance = 1e-8;
    Format output = Format::text;
    std::optional<std::string> link_table;
    bool timing = false;  // adds a separate "timing" object to JSON output
};

inline void validate(const RunConfig &c) {
    if (!(c.tau > 0)) throw std::invalid_argument("tau must be positive");
    if (!(c.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (c.pairs && *c.pairs < 1) throw std::invalid_argument("pairs must be positive");
}

/// A requested backend cannot evaluate this word (pairs, generator range).
class BackendUnavailable : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// c1/c3 table.

struct LinkEntry {
    std::string name;
    ArfData arf;
};

using LinkTable = std::map<std::string, LinkEntry>;  // canonical word -> entry

inline LinkTable builtin_link_table() {
    LinkTable t;
    auto put = [&](const char *word, const char *name, ArfData d) { t[to_string(parse_braid(word))] = {name, d}; };
    put("s1 s1", "Hopf", {{0, 0}, {}});
    put("s1 s1 s1", "Trefoil", {{1}, {}});
    put("s1 s1 s1 s1", "Solomon", {{0, 0}, {}});
    put("s1 s2^-1 s1 s2^-1", "Figure-Eight", {{1}, {}});
    put("s1 s2^-1 s1 s2^-1 s1 s2^-1", "Borromean", {{0, 0, 0}, {1}});
    return t;
}

/// Reads [{"word": "...", "name": "...", "c1": [...], "c3": [...]}, ...] and
/// merges it over `base`.
inline LinkTable load_link_table(std::istream &in, LinkTable base = builtin_link_table()) {
    json doc = json::parse(in);
    if (!doc.is_array()) throw std::invalid_argument("link table must be a JSON array");
    for (auto &e : doc) {
        if (!e.contains("word") || !e.contains("c1")) throw std::invalid_argument("link table entry needs word and c1");
        BraidWord w = parse_braid(e.at("word").get<std::string>());
        LinkEntry le{e.value("name", std::string()), {e.at("c1").get<std::vector<int>>(), e.value("c3", std::vector<int>{})}};
        auto inv = link_invariants(w);
        if (le.arf.c1.size() != static_cast<size_t>(inv.components)) {
            throw std::invalid_argument("link table entry '" + to_string(w) + "': c1 needs " +
                                        std::to_string(inv.components) + " values");
        }
        if (!le.arf.c3.empty() && le.arf.c3.size() != triple_count(inv.components)) {
            throw std::invalid_argument("link table entry '" + to_string(w) + "': c3 needs " +
                                        std::to_string(triple_count(inv.components)) + " values");
        }
        base[to_string(w)] = le;
    }
    return base;
}

inline LinkTable load_link_table(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open link table " + path);
    return load_link_table(f);
}

/// The empty word is the unlink and needs no entry.
inline std::optional<LinkEntry> lookup(const LinkTable &t, const BraidWord &w) {
    if (w.letters.empty()) {
        int n = w.strands;
        return LinkEntry{"Unlink", {std::vector<int>(n, 0), std::vector<int>(triple_count(n), 0)}};
    }
    auto it = t.find(to_string(w));
    if (it == t.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Per-word report.

struct WordReport {
    std::string input;
    BraidWord word;  // widened to `pairs` strands when needed
    int pairs = 0;
    LinkInvariants inv;
    std::optional<std::complex<double>> anyon;
    std::optional<double> spin_abs;
    std::optional<std::complex<double>> kauffman;
    std::string kauffman_polynomial;  // in t when possible, else in A
    std::vector<std::string> notes;
    double max_diff = 0;
    bool agree = true;
    std::map<std::string, double> seconds;
};

namespace detail {

inline double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline bool wants(Backend requested, Backend b) { return requested == Backend::all || requested == b; }

}  // namespace detail

/// Evaluates one word. Throws ParseError on bad input, CapacityError when the
/// state sum is too large and BackendUnavailable when an explicitly requested
/// backend cannot run; with --backend all such backends are skipped.
inline WordReport run_jones(const std::string &text, const RunConfig &cfg) {
    validate(cfg);
    WordReport r;
    r.input = text;
    r.word = parse_braid(text);
    r.pairs = cfg.pairs ? *cfg.pairs : std::max(default_pairs(r.word), r.word.strands);
    if (r.pairs < r.word.strands) {
        throw std::invalid_argument("word has " + std::to_string(r.word.strands) + " strands but pairs is " +
                                    std::to_string(r.pairs));
    }
    r.word.strands = r.pairs;
    r.inv = link_invariants(r.word);
    const bool explicit_backend = cfg.backend != Backend::all;
    bool spin_failed = false;
    auto skip = [&](const std::string &why) {
        if (explicit_backend) throw BackendUnavailable(why);
        r.notes.push_back(why);
    };

    if (detail::wants(cfg.backend, Backend::anyon)) {
        auto t0 = std::chrono::steady_clock::now();
        if (r.pairs == 2 || r.pairs == 3) {
            r.anyon = jones_su2_2(r.word, r.pairs).value;
        } else {
            skip("anyon backend supports 2 or 3 pairs, got " + std::to_string(r.pairs));
        }
        r.seconds["anyon"] = detail::since(t0);
    }
    if (detail::wants(cfg.backend, Backend::spin)) {
        auto t0 = std::chrono::steady_clock::now();
        if ((r.pairs == 2 || r.pairs == 3) && r.word.max_generator() <= 2) {
            try {
                auto s = spin::run_word(r.word, spin::logical_zero_state(), {cfg.tau});
                double amp = std::abs(spin::logical_state(s)(0));
                r.spin_abs = std::pow(std::sqrt(2.0), r.pairs - 1) * amp;
            } catch (const spin::PreconditionError &e) {
                // Leakage out of the ground space at short tau.
                r.notes.push_back(std::string("spin backend failed: ") + e.what());
                spin_failed = true;
            }
        } else {
            skip("spin backend realizes s1 and s2 with 2 or 3 pairs only");
        }
        r.seconds["spin"] = detail::since(t0);
    }
    if (detail::wants(cfg.backend, Backend::kauffman)) {
        auto t0 = std::chrono::steady_clock::now();
        Laurent v = jones_polynomial(r.word);
        r.kauffman = v.eval_at(a_at_t_equals_i());
        Laurent vt;
        r.kauffman_polynomial = to_t_variable(v, vt) ? vt.str("t") : v.str("A");
        r.seconds["kauffman"] = detail::since(t0);
    }

    std::vector<std::complex<double>> signed_vals;
    if (r.anyon) signed_vals.push_back(*r.anyon);
    if (r.kauffman) signed_vals.push_back(*r.kauffman);
    for (size_t i = 0; i < signed_vals.size(); i++) {
        for (size_t j = i + 1; j < signed_vals.size(); j++) {
            r.max_diff = std::max(r.max_diff, std::abs(signed_vals[i] - signed_vals[j]));
        }
    }
    if (r.spin_abs) {
        for (auto v : signed_vals) r.max_diff = std::max(r.max_diff, std::abs(std::abs(v) - *r.spin_abs));
    }
    r.agree = r.max_diff <= cfg.tolerance && !spin_failed;
    return r;
}

// ---------------------------------------------------------------------------
// Rendering.

namespace detail {

/// Rounds away noise below 1e-12 so printed values are stable.
inline double clean(double v) {
    double r = std::round(v * 1e12) / 1e12;
    return r == 0 ? 0.0 : r;
}

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", clean(v));
    return buf;
}

inline std::string cnum(std::complex<double> v) {
    double im = clean(v.imag());
    if (im == 0) return num(v.real());
    return num(v.real()) + (im < 0 ? " - " : " + ") + num(std::abs(im)) + "i";
}

inline json complex_json(std::complex<double> v) { return json::array({clean(v.real()), clean(v.imag())}); }

inline json matrix_json(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) row.push_back(complex_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline std::string linking_text(const LinkInvariants &inv) {
    std::string out;
    for (auto &row : inv.linking) {
        out += out.empty() ? "[" : "; ";
        for (size_t j = 0; j < row.size(); j++) out += (j ? " " : "") + std::to_string(row[j]);
    }
    return out.empty() ? "[]" : out + "]";
}

}  // namespace detail

inline json invariants_json(const LinkInvariants &inv) {
    return {{"writhe", inv.writhe},
            {"components", inv.components},
            {"linking", inv.linking},
            {"proper", inv.proper}};
}

inline json to_json(const WordReport &r) {
    json b = json::object();
    if (r.anyon) {
        b["anyon"] = {{"value", detail::complex_json(*r.anyon)}, {"abs", detail::clean(std::abs(*r.anyon))}};
    }
    if (r.spin_abs) b["spin"] = {{"abs", detail::clean(*r.spin_abs)}};
    if (r.kauffman) {
        b["kauffman"] = {{"value", detail::complex_json(*r.kauffman)},
                         {"abs", detail::clean(std::abs(*r.kauffman))},
                         {"polynomial", r.kauffman_polynomial}};
    }
    json out = {{"word", to_string(r.word)},
                {"strands", r.word.strands},
                {"pairs", r.pairs},
                {"invariants", invariants_json(r.inv)},
                {"backends", b},
                {"max_diff", detail::clean(r.max_diff)},
                {"agree", r.agree}};
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

inline json timing_json(const WordReport &r) {
    json t = json::object();
    for (auto &[k, v] : r.seconds) t[k] = v;
    return t;
}

inline std::string csv_header() {
    return "word,writhe,components,proper,V_anyon_re,V_anyon_im,V_abs_majorana,V_kauffman_re,V_kauffman_im,agree\n";
}

inline std::string to_csv_row(const WordReport &r) {
    auto opt = [](const auto &v, auto f) { return v ? detail::num(f(*v)) : std::string(); };
    std::ostringstream o;
    o << '"' << to_string(r.word) << "\"," << r.inv.writhe << ',' << r.inv.components << ','
      << (r.inv.proper ? "true" : "false") << ','
      << opt(r.anyon, [](auto v) { return v.real(); }) << ',' << opt(r.anyon, [](auto v) { return v.imag(); })
      << ',' << opt(r.spin_abs, [](double v) { return v; }) << ','
      << opt(r.kauffman, [](auto v) { return v.real(); }) << ','
      << opt(r.kauffman, [](auto v) { return v.imag(); }) << ',' << (r.agree ? "true" : "false") << '\n';
    return o.str();
}

inline std::string to_text(const WordReport &r) {
    std::ostringstream o;
    o << "word: " << to_string(r.word) << "  (strands " << r.word.strands << ", pairs " << r.pairs << ")\n";
    o << "writhe: " << r.inv.writhe << "  components: " << r.inv.components
      << "  linking: " << detail::linking_text(r.inv) << "  proper: " << (r.inv.proper ? "true" : "false") << '\n';
    if (r.anyon) o << "  anyon     V(i) = " << detail::cnum(*r.anyon) << "   |V| = " << detail::num(std::abs(*r.anyon)) << '\n';
    if (r.spin_abs) o << "  spin      |V|  = " << detail::num(*r.spin_abs) << '\n';
    if (r.kauffman) {
        o << "  kauffman  V(i) = " << detail::cnum(*r.kauffman) << "   |V| = " << detail::num(std::abs(*r.kauffman))
          << "   V = " << r.kauffman_polynomial << '\n';
    }
    for (auto &n : r.notes) o << "  note: " << n << '\n';
    o << (r.agree ? "agree" : "DISAGREE") << " (max diff " << detail::num(r.max_diff) << ")\n";
    return o.str();
}

/// Pairwise differences between backends, shown when they disagree.
inline std::string diff_table(const WordReport &r) {
    std::vector<std::pair<std::string, std::complex<double>>> vals;
    if (r.anyon) vals.emplace_back("anyon", *r.anyon);
    if (r.kauffman) vals.emplace_back("kauffman", *r.kauffman);
    std::ostringstream o;
    o << "backend pair          |diff|\n";
    for (size_t i = 0; i < vals.size(); i++) {
        for (size_t j = i + 1; j < vals.size(); j++) {
            o << "  " << vals[i].first << " - " << vals[j].first << "   "
              << detail::num(std::abs(vals[i].second - vals[j].second)) << '\n';
        }
        if (r.spin_abs) {
            o << "  |" << vals[i].first << "| - spin   " << detail::num(std::abs(std::abs(vals[i].second) - *r.spin_abs))
              << '\n';
        }
    }
    return o.str();
}

// ---------------------------------------------------------------------------
// braid-info.

struct BraidInfo {
    BraidWord word;
    LinkInvariants inv;
    std::optional<LinkEntry> entry;
    std::optional<int> arf;
    std::vector<int> c2;  // per pair i < j
    std::optional<double> value;
};

inline BraidInfo braid_info(const std::string &text, const LinkTable &table) {
    BraidInfo b;
    b.word = parse_braid(text);
    b.inv = link_invariants(b.word);
    for (int i = 0; i < b.inv.components; i++) {
        for (int j = i + 1; j < b.inv.components; j++) b.c2.push_back(c2_pair(b.inv.linking[i][j]));
    }
    b.entry = lookup(table, b.word);
    if (!b.inv.proper) {
        b.value = jones_from_arf(b.inv, std::nullopt);
    } else if (b.entry) {
        b.arf = arf_invariant(b.inv, b.entry->arf);
        b.value = jones_from_arf(b.inv, b.arf);
    }
    return b;
}

inline json to_json(const BraidInfo &b) {
    json out = {{"word", to_string(b.word)}, {"strands", b.word.strands}, {"invariants", invariants_json(b.inv)},
                {"c2", b.c2}};
    if (b.entry) out["name"] = b.entry->name;
    if (b.arf) out["arf"] = *b.arf;
    if (b.value) out["jones_at_i"] = detail::clean(*b.value);
    return out;
}

inline std::string to_text(const BraidInfo &b) {
    std::ostringstream o;
    o << "word: " << to_string(b.word) << "  (strands " << b.word.strands << ")\n";
    if (b.entry && !b.entry->name.empty()) o << "link: " << b.entry->name << '\n';
    o << "writhe: " << b.inv.writhe << '\n';
    o << "components: " << b.inv.components << '\n';
    o << "linking: " << detail::linking_text(b.inv) << '\n';
    if (b.inv.components == 2) o << "lk=" << b.inv.linking[0][1] << ", c2=" << b.c2[0] << '\n';
    o << "proper: " << (b.inv.proper ? "true" : "false") << '\n';
    if (b.arf) o << "arf: " << *b.arf << '\n';
    if (b.value) {
        o << "V(i)=" << detail::num(*b.value) << '\n';
    } else {
        o << "V(i): needs c1/c3 data (--link-table)\n";
    }
    return o.str();
}

// ---------------------------------------------------------------------------
// verify.

inline std::string to_text(const std::vector<Check> &checks) {
    std::ostringstream o;
    for (auto &c : checks) {
        char t[32];
        std::snprintf(t, sizeof t, "%.3f", c.seconds);
        o << (c.passed ? "PASS" : "FAIL") << "  [" << c.criterion << "] " << c.name << ": " << c.detail << "  (" << t
          << " s)\n";
    }
    auto v = criterion_verdicts(checks);
    int failed = 0;
    for (auto &[k, ok] : v) failed += ok ? 0 : 1;
    o << (failed ? std::to_string(failed) + " of " + std::to_string(v.size()) + " criteria failed"
                 : "all " + std::to_string(v.size()) + " criteria passed")
      << '\n';
    return o.str();
}

/// Chi matrices of the simulated two-qubit logical factors and density
/// matrices of the simulated final states.
inline json verify_artifacts(const VerifyConfig &cfg) {
    json out = json::object();
    spin::SequenceOptions opt{cfg.tau};
    json chis = json::object();
    for (auto [b, idle] : {std::pair{spin::Braid::sigma1, 2}, std::pair{spin::Braid::sigma2_inv, 0}}) {
        try {
            CMatrix f = two_qubit_factor(spin::extract_braid_matrix(b, opt).logical, idle);
            auto chi = chi_from_unitary(f);
            chis[spin::braid_name(b)] = {{"basis", chi.labels}, {"chi", detail::matrix_json(chi.chi)}};
        } catch (const std::exception &e) {
            chis[spin::braid_name(b)] = {{"error", e.what()}};
        }
    }
    out["chi"] = chis;
    json rhos = json::object();
    for (auto &l : reference::links()) {
        try {
            auto s = spin::run_word(parse_braid(l.word), spin::logical_zero_state(), opt);
            Eigen::VectorXcd lv = spin::logical_state(s);
            rhos[l.name] = {{"basis", {"000", "001", "010", "011", "100", "101", "110", "111"}},
                            {"rho", detail::matrix_json(density_matrix(lv))}};
        } catch (const std::exception &e) {
            rhos[l.name] = {{"error", e.what()}};
        }
    }
    out["rho"] = rhos;
    return out;
}

/// Check details and artifacts only; timings go to a separate object.
inline json verify_json(const std::vector<Check> &checks, const VerifyConfig &cfg, bool timing) {
    json cs = json::array();
    for (auto &c : checks) {
        cs.push_back({{"name", c.name}, {"criterion", c.criterion}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json crit = json::object();
    for (auto &[k, ok] : criterion_verdicts(checks)) crit[std::to_string(k)] = ok;
    json out = {{"tau", cfg.tau}, {"checks", cs}, {"criteria", crit}, {"artifacts", verify_artifacts(cfg)}};
    if (timing) {
        json t = json::object();
        for (auto &c : checks) t[c.name] = c.seconds;
        out["timing"] = t;
    }
    return out;
}

inline std::string verify_csv(const std::vector<Check> &checks) {
    std::string out = "criterion,name,passed,detail\n";
    for (auto &c : checks) {
        std::string d = c.detail;
        for (size_t p = 0; (p = d.find('"', p)) != std::string::npos; p += 2) d.insert(p, "\"");
        out += std::to_string(c.criterion) + ",\"" + c.name + "\"," + (c.passed ? "true" : "false") + ",\"" + d + "\"\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// schedule export.

inline json schedule_json(spin::Braid b) {
    json steps = json::array();
    for (auto &s : spin::schedule(b)) {
        if (s.kind == spin::ScheduleStep::Kind::rotate) {
            steps.push_back({{"op", "rotate"}, {"site", s.site}, {"from", std::string(1, s.from)},
                             {"to", std::string(1, s.to)}});
        } else {
            steps.push_back({{"op", "ite"}, {"term", s.cool.term.str()}});
            json c = {{"op", "cool"}, {"term", s.cool.term.str()}, {"pairing", s.cool.pairing.str()}};
            if (!s.cool.label.empty()) c["state"] = s.cool.label;
            steps.push_back(c);
        }
    }
    return {{"braid", spin::braid_name(b)}, {"sites", spin::kSites}, {"steps", steps}};
}

}  // namespace mjones::report

#endif
