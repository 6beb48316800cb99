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


#include "mjones/kauffman.hpp"

#include <cstdint>
#include <limits>
#include <random>

#include "gtest/gtest.h"

#include "mjones/laurent.hpp"

using namespace mjones;

namespace {

Laurent t_poly(std::initializer_list<std::pair<int, int64_t>> terms) {
    Laurent p;
    for (auto [e, c] : terms) p += Laurent::monomial(c, e);
    return p;
}

Laurent jones_in_t(const std::string &word) {
    Laurent t;
    EXPECT_TRUE(to_t_variable(jones_polynomial(parse_braid(word)), t)) << word;
    return t;
}

BraidWord random_word(std::mt19937 &rng, int strands, int len) {
    std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
    BraidWord w{strands, {}};
    for (int i = 0; i < len; i++) w.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return w;
}

}  // namespace

TEST(laurent, arithmetic) {
    Laurent a = Laurent::monomial(2, -3) + Laurent::monomial(-1, 2);
    Laurent b = Laurent::monomial(1, 3) + 5;
    Laurent p = a * b;
    EXPECT_EQ(p.coeff(0), 2);
    EXPECT_EQ(p.coeff(-3), 10);
    EXPECT_EQ(p.coeff(5), -1);
    EXPECT_EQ(p.coeff(2), -5);
    EXPECT_EQ(p - p, Laurent());
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(0), Laurent(1));
    EXPECT_EQ(a.pow(2), a * a);
    EXPECT_EQ(Laurent::monomial(3, 2).substitute_power(-2), Laurent::monomial(3, -4));
    EXPECT_EQ(a.min_exp(), -3);
    EXPECT_EQ(a.max_exp(), 2);
}

TEST(laurent, printing) {
    EXPECT_EQ(Laurent().str(), "0");
    EXPECT_EQ((Laurent::monomial(-1, -2) + Laurent::monomial(3, 4)).str(), "-A^-2 + 3*A^4");
    EXPECT_EQ(Laurent(7).str("t"), "7");
    EXPECT_EQ((Laurent::monomial(1, 1) - Laurent(2) - Laurent::monomial(1, -1)).str("t"), "-t^-1 - 2 + t");
}

TEST(laurent, overflow_is_reported) {
    Laurent big(std::numeric_limits<int64_t>::max());
    EXPECT_THROW(big + Laurent(1), std::overflow_error);
    EXPECT_THROW(big * Laurent(2), std::overflow_error);
    EXPECT_THROW(Laurent::monomial(1, 0).pow(-1), std::invalid_argument);
}

TEST(laurent, evaluation) {
    Laurent p = Laurent::monomial(1, -2) + Laurent::monomial(1, 2);
    auto v = p.eval_at(std::polar(1.0, 0.3));
    EXPECT_NEAR(v.real(), 2 * std::cos(0.6), 1e-14);
    EXPECT_NEAR(v.imag(), 0, 1e-14);
    EXPECT_THROW(p.eval_at(0.0), std::domain_error);
}

TEST(kauffman, loop_value) { EXPECT_EQ(loop_value(), Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2)); }

TEST(kauffman, unknot_and_unlink) {
    EXPECT_EQ(jones_polynomial(parse_braid("s1")), Laurent(1));
    EXPECT_EQ(jones_polynomial(parse_braid("s1^-1")), Laurent(1));
    EXPECT_EQ(jones_polynomial(parse_braid("")), Laurent(1));
    EXPECT_EQ(jones_polynomial(parse_braid("s1 s2 s3")), Laurent(1));
    // Two-component unlink: -(t^1/2 + t^-1/2) = -A^2 - A^-2.
    EXPECT_EQ(jones_polynomial(parse_braid("strands=2")), loop_value());
    EXPECT_EQ(kauffman_at_i(parse_braid("s1")), std::complex<double>(1, 0));
}

TEST(kauffman, known_polynomials) {
    // Right-handed trefoil.
    EXPECT_EQ(jones_in_t("s1 s1 s1"), t_poly({{1, 1}, {3, 1}, {4, -1}}));
    // Left-handed trefoil is its mirror.
    EXPECT_EQ(jones_in_t("s1^-1 s1^-1 s1^-1"), t_poly({{-1, 1}, {-3, 1}, {-4, -1}}));
    // Figure-eight.
    EXPECT_EQ(jones_in_t("s1 s2^-1 s1 s2^-1"), t_poly({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
    // Borromean rings.
    EXPECT_EQ(jones_in_t("s1 s2^-1 s1 s2^-1 s1 s2^-1"),
              t_poly({{-3, -1}, {-2, 3}, {-1, -2}, {0, 4}, {1, -2}, {2, 3}, {3, -1}}));
    // Positive Hopf link: -t^1/2 - t^5/2, i.e. -A^-2 - A^-10.
    EXPECT_EQ(jones_polynomial(parse_braid("s1 s1")), Laurent::monomial(-1, -2) + Laurent::monomial(-1, -10));
}

TEST(kauffman, five_links_at_i) {
    const double r2 = std::sqrt(2.0);
    struct Case {
        const char *word;
        double value;
    };
    for (auto c : {Case{"s1 s1", 0.0}, Case{"s1 s1 s1", -1.0}, Case{"s1 s1 s1 s1", -r2},
                   Case{"s1 s2^-1 s1 s2^-1", -1.0}, Case{"s1 s2^-1 s1 s2^-1 s1 s2^-1", -2.0}}) {
        auto v = kauffman_at_i(parse_braid(c.word));
        EXPECT_NEAR(v.real(), c.value, 1e-12) << c.word;
        EXPECT_NEAR(v.imag(), 0.0, 1e-12) << c.word;
    }
}

TEST(kauffman, evaluation_point) {
    auto a = a_at_t_equals_i();
    EXPECT_NEAR(std::abs(Laurent::ipow(a, -4) - std::complex<double>(0, 1)), 0, 1e-15);
    auto p = a_principal();
    EXPECT_NEAR(std::abs(Laurent::ipow(p, -4) - std::complex<double>(0, 1)), 0, 1e-15);
    // The principal root flips the sign for an even number of components.
    auto sol = jones_polynomial(parse_braid("s1 s1 s1 s1"));
    EXPECT_NEAR(sol.eval_at(p).real(), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(sol.eval_at(a).real(), -std::sqrt(2.0), 1e-12);
    auto tref = jones_polynomial(parse_braid("s1 s1 s1"));
    EXPECT_NEAR(std::abs(tref.eval_at(p) - tref.eval_at(a)), 0, 1e-12);
}

TEST(kauffman, capacity) {
    BraidWord w{2, std::vector<int>(kMaxStateSumCrossings + 1, 1)};
    EXPECT_THROW(bracket(w), CapacityError);
    w.letters.pop_back();
    EXPECT_NO_THROW(bracket(w));
}

TEST(kauffman, reidemeister_two) {
    std::mt19937 rng(21);
    for (int i = 0; i < 200; i++) {
        auto w = random_word(rng, 2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 7));
        auto v = w;
        std::uniform_int_distribution<size_t> pos(0, w.letters.size());
        int g = 1 + static_cast<int>(rng() % (w.strands - 1));
        if (rng() & 1) g = -g;
        v.letters.insert(v.letters.begin() + static_cast<std::ptrdiff_t>(pos(rng)), {g, -g});
        EXPECT_EQ(bracket(w), bracket(v)) << to_string(w);
    }
}

TEST(kauffman, braid_relation_and_markov) {
    std::mt19937 rng(22);
    for (int i = 0; i < 100; i++) {
        auto w = random_word(rng, 3, static_cast<int>(rng() % 6));
        auto a = w, b = w;
        a.letters.insert(a.letters.end(), {1, 2, 1});
        b.letters.insert(b.letters.end(), {2, 1, 2});
        EXPECT_EQ(jones_polynomial(a), jones_polynomial(b));
        // Stabilization adds a strand and one crossing without changing V.
        auto s = w;
        s.strands = 4;
        s.letters.push_back(rng() & 1 ? 3 : -3);
        EXPECT_EQ(jones_polynomial(w), jones_polynomial(s));
        // Conjugation.
        auto c = w;
        c.letters.insert(c.letters.begin(), 2);
        c.letters.push_back(-2);
        EXPECT_EQ(jones_polynomial(w), jones_polynomial(c));
    }
}

TEST(kauffman, agrees_with_arf_values) {
    struct Case {
        const char *word;
        ArfData data;
    };
    for (auto c : {Case{"s1 s1 s1", {{1}, {}}}, Case{"s1 s1 s1 s1", {{0, 0}, {}}},
                   Case{"s1 s2^-1 s1 s2^-1", {{1}, {}}}, Case{"s1 s2^-1 s1 s2^-1 s1 s2^-1", {{0, 0, 0}, {1}}},
                   Case{"strands=3", {{0, 0, 0}, {0}}}, Case{"strands=2", {{0, 0}, {}}}}) {
        auto w = parse_braid(c.word);
        auto inv = link_invariants(w);
        double v = jones_from_arf(inv, arf_invariant(inv, c.data));
        EXPECT_NEAR(std::abs(kauffman_at_i(w) - v), 0, 1e-12) << c.word;
    }
}

TEST(kauffman, non_proper_links_vanish) {
    std::mt19937 rng(23);
    int seen = 0;
    for (int i = 0; i < 300; i++) {
        auto w = random_word(rng, 2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 8));
        if (link_invariants(w).proper) continue;
        seen++;
        EXPECT_NEAR(std::abs(kauffman_at_i(w)), 0, 1e-12) << to_string(w);
    }
    EXPECT_GT(seen, 10);
}
