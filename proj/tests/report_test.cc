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


#include "mjones/report.hpp"

#include <sstream>

#include "gtest/gtest.h"

using namespace mjones;
using namespace mjones::report;

namespace {

RunConfig cfg_for(Backend b) {
    RunConfig c;
    c.backend = b;
    return c;
}

}  // namespace

TEST(link_table, builtin_entries) {
    auto t = builtin_link_table();
    EXPECT_EQ(t.size(), 5u);
    auto e = lookup(t, parse_braid("s1 s2^-1 s1 s2^-1 s1 s2^-1"));
    ASSERT_TRUE(e);
    EXPECT_EQ(e->name, "Borromean");
    EXPECT_EQ(e->arf.c3, std::vector<int>{1});
    EXPECT_FALSE(lookup(t, parse_braid("s1 s1 s1 s1 s1")));
    auto u = lookup(t, parse_braid("strands=3"));
    ASSERT_TRUE(u);
    EXPECT_EQ(u->name, "Unlink");
    EXPECT_EQ(u->arf.c1.size(), 3u);
}

TEST(link_table, load_and_merge) {
    std::istringstream in(R"([{"word": "s1 s1 s1 s1 s1", "name": "Cinquefoil", "c1": [1]}])");
    auto t = load_link_table(in);
    EXPECT_EQ(t.size(), 6u);
    auto e = lookup(t, parse_braid("s1 s1 s1 s1 s1"));
    ASSERT_TRUE(e);
    EXPECT_EQ(e->name, "Cinquefoil");
}

TEST(link_table, load_errors) {
    auto bad = [](const char *text) {
        std::istringstream in(text);
        return load_link_table(in);
    };
    EXPECT_THROW(bad(R"({"word": "s1"})"), std::invalid_argument);
    EXPECT_THROW(bad(R"([{"word": "s1 s1"}])"), std::invalid_argument);
    EXPECT_THROW(bad(R"([{"word": "s1 s1", "c1": [0]}])"), std::invalid_argument);
    EXPECT_THROW(bad(R"([{"word": "s1 s2 s1 s2 s1 s2", "c1": [0, 0, 0], "c3": [1, 0]}])"), std::invalid_argument);
    EXPECT_THROW(bad(R"([{"word": "s1 q2", "c1": [0]}])"), ParseError);
    EXPECT_THROW(bad("[{"), json::parse_error);
    EXPECT_THROW(load_link_table(std::string("/nonexistent/table.json")), std::invalid_argument);
}

TEST(run_jones, all_backends_agree_on_known_links) {
    for (const char *w : {"s1 s1", "s1 s1 s1", "s1 s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s2^-1 s1 s2^-1 s1 s2^-1"}) {
        auto r = run_jones(w, cfg_for(Backend::all));
        EXPECT_TRUE(r.anyon && r.spin_abs && r.kauffman) << w;
        EXPECT_TRUE(r.agree) << w << " " << r.max_diff;
        EXPECT_TRUE(r.notes.empty());
    }
}

TEST(run_jones, pairs_and_widening) {
    auto r = run_jones("s1 s1 s1", cfg_for(Backend::all));
    EXPECT_EQ(r.pairs, 2);
    EXPECT_NEAR(std::abs(*r.anyon - std::complex<double>(-1, 0)), 0, 1e-12);

    RunConfig c = cfg_for(Backend::all);
    c.pairs = 3;
    auto w = run_jones("s1 s1 s1", c);
    EXPECT_EQ(w.word.strands, 3);
    EXPECT_NEAR(std::abs(*w.anyon - std::sqrt(2.0) * *r.anyon), 0, 1e-12);
    EXPECT_TRUE(w.agree);

    c.pairs = 2;
    EXPECT_THROW(run_jones("s2 s1", c), std::invalid_argument);
    c.pairs = 0;
    EXPECT_THROW(run_jones("s1", c), std::invalid_argument);
}

TEST(run_jones, unavailable_backends) {
    auto r = run_jones("s1 s2 s3 s1", cfg_for(Backend::all));
    EXPECT_EQ(r.pairs, 4);
    EXPECT_FALSE(r.anyon);
    EXPECT_FALSE(r.spin_abs);
    ASSERT_TRUE(r.kauffman);
    EXPECT_EQ(r.notes.size(), 2u);
    EXPECT_TRUE(r.agree);
    EXPECT_THROW(run_jones("s1 s2 s3 s1", cfg_for(Backend::anyon)), BackendUnavailable);
    EXPECT_THROW(run_jones("s1 s2 s3 s1", cfg_for(Backend::spin)), BackendUnavailable);
}

TEST(run_jones, capacity_and_parse_errors) {
    std::string big;
    for (int k = 0; k < 25; k++) big += "s1 ";
    EXPECT_THROW(run_jones(big, cfg_for(Backend::kauffman)), CapacityError);
    EXPECT_NO_THROW(run_jones(big, cfg_for(Backend::anyon)));
    EXPECT_THROW(run_jones("s1 x2", cfg_for(Backend::all)), ParseError);
    RunConfig c;
    c.tau = -1;
    EXPECT_THROW(run_jones("s1", c), std::invalid_argument);
}

TEST(run_jones, finite_tau_is_detected) {
    RunConfig c = cfg_for(Backend::all);
    c.tau = 0.5;
    auto one = run_jones("s1", c);
    ASSERT_TRUE(one.spin_abs);
    EXPECT_FALSE(one.agree);
    EXPECT_NE(diff_table(one).find("spin"), std::string::npos);

    // Leakage from the first letter trips the ground-space check on the next.
    auto r = run_jones("s1 s1 s1 s1", c);
    EXPECT_FALSE(r.spin_abs);
    EXPECT_FALSE(r.agree);
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_NE(r.notes[0].find("spin backend failed"), std::string::npos);
}

TEST(rendering, json_is_stable) {
    auto r1 = run_jones("s1 s2^-1 s1 s2^-1", cfg_for(Backend::all));
    auto r2 = run_jones("s1 s2^-1 s1 s2^-1", cfg_for(Backend::all));
    EXPECT_EQ(to_json(r1).dump(2), to_json(r2).dump(2));
    auto j = to_json(r1);
    EXPECT_EQ(j["word"], "s1 s2^-1 s1 s2^-1");
    EXPECT_EQ(j["pairs"], 3);
    EXPECT_EQ(j["agree"], true);
    EXPECT_EQ(j["backends"]["kauffman"]["polynomial"], "t^-2 - t^-1 + 1 - t + t^2");
    EXPECT_FALSE(j.contains("notes"));
    EXPECT_EQ(timing_json(r1).size(), 3u);
}

TEST(rendering, csv) {
    auto h = csv_header();
    EXPECT_EQ(h.rfind("word,writhe,components,proper,", 0), 0u);
    EXPECT_EQ(std::count(h.begin(), h.end(), ','), 9);
    auto row = to_csv_row(run_jones("s1 s1", cfg_for(Backend::kauffman)));
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 9);
    EXPECT_EQ(row.rfind("\"s1 s1\",2,2,false,,,,", 0), 0u) << row;
}

TEST(rendering, text) {
    auto t = to_text(run_jones("s1 s1 s1", cfg_for(Backend::all)));
    EXPECT_NE(t.find("anyon"), std::string::npos);
    EXPECT_NE(t.find("agree"), std::string::npos);
    EXPECT_EQ(t.find("DISAGREE"), std::string::npos);
}

TEST(braid_info, known_links) {
    auto t = builtin_link_table();
    auto hopf = braid_info("s1 s1", t);
    ASSERT_TRUE(hopf.value);
    EXPECT_NEAR(*hopf.value, 0, 1e-15);
    EXPECT_NE(to_text(hopf).find("V(i)=0"), std::string::npos);

    auto sol = braid_info("s1 s1 s1 s1", t);
    EXPECT_NE(to_text(sol).find("lk=2, c2=1"), std::string::npos);
    EXPECT_NEAR(*sol.value, -std::sqrt(2.0), 1e-12);

    auto bor = braid_info("s1 s2^-1 s1 s2^-1 s1 s2^-1", t);
    EXPECT_EQ(to_json(bor)["name"], "Borromean");
    EXPECT_NEAR(*bor.value, -2, 1e-12);

    auto unknown = braid_info("s1 s1 s1 s1 s1", t);
    EXPECT_FALSE(unknown.value);
    EXPECT_NE(to_text(unknown).find("--link-table"), std::string::npos);

    auto unlink = braid_info("", t);
    EXPECT_NEAR(*unlink.value, 1, 1e-15);
}

TEST(braid_info, strands_option) {
    auto t = builtin_link_table();
    auto u = braid_info("s2 s2^-1", t);
    EXPECT_EQ(u.word.strands, 3);
    EXPECT_EQ(u.inv.components, 3);
    EXPECT_TRUE(u.inv.proper);
    EXPECT_FALSE(u.value);  // not the empty word, so it needs table data
    auto s3 = braid_info("strands=3", t);
    ASSERT_TRUE(s3.value);
    EXPECT_NEAR(*s3.value, 2, 1e-15);
}

TEST(schedule_export, structure) {
    auto j = schedule_json(spin::Braid::sigma1);
    EXPECT_EQ(j["braid"], "s1");
    EXPECT_EQ(j["sites"], 10);
    int cools = 0, ites = 0;
    for (auto &s : j["steps"]) {
        cools += s["op"] == "cool";
        ites += s["op"] == "ite";
    }
    EXPECT_EQ(cools, 5);
    EXPECT_EQ(ites, 5);
    EXPECT_EQ(j["steps"][0]["op"], "rotate");
    EXPECT_EQ(j.dump(), schedule_json(spin::Braid::sigma1).dump());
}
