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

// mjones: Jones polynomial values at t = i from anyon braid matrices, the
// 10-site spin protocol and the Kauffman bracket.
//
// Exit codes: 0 ok, 1 disagreement or failed check, 2 bad input,
// 3 capacity or backend limits.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mjones/report.hpp"
#include "mjones/verify.hpp"

namespace {

using namespace mjones;
using report::Backend;
using report::Format;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCapacity = 3;

const std::map<std::string, Backend> kBackends = {
    {"anyon", Backend::anyon}, {"spin", Backend::spin}, {"kauffman", Backend::kauffman}, {"all", Backend::all}};
const std::map<std::string, Format> kFormats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

int run_jones_cmd(const std::vector<std::string> &words, const report::RunConfig &cfg) {
    std::vector<report::WordReport> reports;
    for (auto &w : words) {
        try {
            reports.push_back(report::run_jones(w, cfg));
        } catch (const ParseError &e) {
            std::cerr << "error: " << e.what() << '\n';
            return kBadInput;
        } catch (const CapacityError &e) {
            std::cerr << "error: " << e.what() << '\n';
            return kCapacity;
        } catch (const report::BackendUnavailable &e) {
            std::cerr << "error: " << e.what() << '\n';
            return kCapacity;
        } catch (const std::invalid_argument &e) {
            std::cerr << "error: " << e.what() << '\n';
            return kBadInput;
        }
    }

    bool all_agree = true;
    for (auto &r : reports) all_agree = all_agree && r.agree;
    switch (cfg.output) {
        case Format::text:
            for (size_t i = 0; i < reports.size(); i++) {
                if (i) std::cout << '\n';
                std::cout << report::to_text(reports[i]);
            }
            break;
        case Format::json: {
            report::json doc = {{"backend", cfg.backend == Backend::all        ? "all"
                                            : cfg.backend == Backend::anyon  ? "anyon"
                                            : cfg.backend == Backend::spin   ? "spin"
                                                                             : "kauffman"},
                                {"tau", cfg.tau},
                                {"tolerance", cfg.tolerance},
                                {"reports", report::json::array()}};
            for (auto &r : reports) doc["reports"].push_back(report::to_json(r));
            if (cfg.timing) {
                report::json t = report::json::array();
                for (auto &r : reports) t.push_back(report::timing_json(r));
                doc["timing"] = t;
            }
            std::cout << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            std::cout << report::csv_header();
            for (auto &r : reports) std::cout << report::to_csv_row(r);
            break;
    }
    if (!all_agree) {
        for (auto &r : reports) {
            if (!r.agree) std::cerr << "disagreement for " << to_string(r.word) << ":\n" << report::diff_table(r);
        }
        return kFailed;
    }
    return kOk;
}

int run_verify_cmd(const report::RunConfig &cfg) {
    VerifyConfig vc{cfg.tau};
    auto checks = run_verify(vc);
    switch (cfg.output) {
        case Format::text:
            std::cout << report::to_text(checks);
            break;
        case Format::json:
            std::cout << report::verify_json(checks, vc, cfg.timing).dump(2) << '\n';
            break;
        case Format::csv:
            std::cout << report::verify_csv(checks);
            break;
    }
    bool ok = true;
    for (auto &c : checks) {
        if (!c.passed) {
            std::cerr << "failed: [" << c.criterion << "] " << c.name << '\n';
            ok = false;
        }
    }
    return ok ? kOk : kFailed;
}

int run_braid_info_cmd(const std::string &word, const report::RunConfig &cfg) {
    try {
        auto table = cfg.link_table ? report::load_link_table(*cfg.link_table) : report::builtin_link_table();
        auto info = report::braid_info(word, table);
        if (cfg.output == Format::json) {
            std::cout << report::to_json(info).dump(2) << '\n';
        } else {
            std::cout << report::to_text(info);
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const report::json::exception &e) {
        std::cerr << "error: link table: " << e.what() << '\n';
        return kBadInput;
    }
    return kOk;
}

int run_schedule_cmd(const std::string &name) {
    for (auto b : {spin::Braid::sigma1, spin::Braid::sigma1_inv, spin::Braid::sigma2, spin::Braid::sigma2_inv}) {
        if (name == spin::braid_name(b)) {
            std::cout << report::schedule_json(b).dump(2) << '\n';
            return kOk;
        }
    }
    std::cerr << "error: unknown braid '" << name << "' (expected s1, s1^-1, s2 or s2^-1)\n";
    return kBadInput;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Jones polynomial values at t = i from three independent backends"};
    app.require_subcommand(1);

    report::RunConfig cfg;
    std::string backend = "all", output = "text";
    int pairs = 0;

    auto add_common = [&](CLI::App *c) {
        c->add_option("--output", output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        c->add_option("--tau", cfg.tau, "imaginary time per cooling step")->check(CLI::PositiveNumber);
        c->add_flag("--timing", cfg.timing, "add timings to JSON output");
    };

    std::vector<std::string> words;
    auto *jones = app.add_subcommand("jones", "evaluate V(i) for braid words");
    jones->add_option("words", words, "braid words, e.g. \"s1 s2^-1 s1\"")->required();
    jones->add_option("--backend", backend, "anyon, spin, kauffman or all")
        ->check(CLI::IsMember({"anyon", "spin", "kauffman", "all"}));
    jones->add_option("--pairs", pairs, "anyon pairs (default 2 if only s1 occurs, else 3)")
        ->check(CLI::PositiveNumber);
    jones->add_option("--tolerance", cfg.tolerance, "agreement tolerance")->check(CLI::PositiveNumber);
    add_common(jones);

    auto *verify = app.add_subcommand("verify", "run the cross-validation suite");
    add_common(verify);

    std::string info_word;
    std::string link_table;
    auto *info = app.add_subcommand("braid-info", "print closure invariants of a braid word");
    info->add_option("word", info_word, "braid word")->required();
    info->add_option("--link-table", link_table, "JSON file with c1/c3 data");
    info->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string sched;
    auto *schedule = app.add_subcommand("schedule", "export a braiding schedule as JSON");
    schedule->add_option("braid", sched, "s1, s1^-1, s2 or s2^-1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kBadInput;
    }

    cfg.backend = kBackends.at(backend);
    cfg.output = kFormats.at(output);
    if (pairs > 0) cfg.pairs = pairs;
    if (!link_table.empty()) cfg.link_table = link_table;

    try {
        if (*jones) return run_jones_cmd(words, cfg);
        if (*verify) return run_verify_cmd(cfg);
        if (*info) return run_braid_info_cmd(info_word, cfg);
        if (*schedule) return run_schedule_cmd(sched);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kOk;
}
