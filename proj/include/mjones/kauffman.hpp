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

#ifndef MJONES_KAUFFMAN_HPP
#define MJONES_KAUFFMAN_HPP

#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mjones/braid.hpp"
#include "mjones/laurent.hpp"

namespace mjones {

class CapacityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxStateSumCrossings = 24;

/// d = -A^2 - A^-2.
inline Laurent loop_value() { return Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2); }

namespace detail {

struct DisjointSets {
    std::vector<int> parent;
    int sets;
    explicit DisjointSets(int n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            sets--;
        }
    }
};

}  // namespace detail

/// Kauffman bracket of the trace closure, normalized so that a single circle
/// is 1. Each state contributes A^(a-b) d^(loops-1). On a positive crossing
/// the A-smoothing keeps the strands vertical; on a negative one it joins
/// them horizontally.
inline Laurent bracket(const BraidWord &w) {
    validate(w);
    const int c = w.crossings();
    const int n = w.strands;
    if (c > kMaxStateSumCrossings) {
        throw CapacityError("state sum limited to " + std::to_string(kMaxStateSumCrossings) + " crossings, got " +
                            std::to_string(c));
    }
    auto node = [n](int level, int pos) { return level * n + pos; };

    // counts[a][loops], where a is the number of A-smoothings.
    std::vector<std::vector<int64_t>> counts(c + 1, std::vector<int64_t>(n + c + 2, 0));
    const uint64_t states = uint64_t{1} << c;
    for (uint64_t mask = 0; mask < states; mask++) {
        detail::DisjointSets ds((c + 1) * n);
        int a = 0;
        for (int l = 0; l < c; l++) {
            int g = w.letters[l];
            int k = std::abs(g) - 1;
            for (int p = 0; p < n; p++) {
                if (p != k && p != k + 1) ds.unite(node(l, p), node(l + 1, p));
            }
            bool a_smooth = (mask >> l) & 1;
            a += a_smooth;
            bool vertical = a_smooth == (g > 0);
            if (vertical) {
                ds.unite(node(l, k), node(l + 1, k));
                ds.unite(node(l, k + 1), node(l + 1, k + 1));
            } else {
                ds.unite(node(l, k), node(l, k + 1));
                ds.unite(node(l + 1, k), node(l + 1, k + 1));
            }
        }
        for (int p = 0; p < n; p++) ds.unite(node(c, p), node(0, p));
        counts[a][ds.sets]++;
    }

    Laurent d = loop_value();
    std::vector<Laurent> dpow{Laurent(1)};
    Laurent out;
    for (int a = 0; a <= c; a++) {
        for (size_t loops = 1; loops < counts[a].size(); loops++) {
            if (counts[a][loops] == 0) continue;
            while (dpow.size() < loops) dpow.push_back(dpow.back() * d);
            out += Laurent::monomial(counts[a][loops], 2 * a - c) * dpow[loops - 1];
        }
    }
    return out;
}

/// V(A) = (-A)^(-3w) <L>, with t = A^-4.
inline Laurent jones_polynomial(const BraidWord &w) {
    auto inv = link_invariants(w);
    int64_t sign = (inv.writhe % 2 == 0) ? 1 : -1;
    return Laurent::monomial(sign, -3 * inv.writhe) * bracket(w);
}

/// Two classes of A give t = A^-4 = i; they differ in the branch of t^(1/2)
/// and so in the sign of V(i) for links with an even number of components.
/// A = e^{3 i pi/8} (t^(1/2) = -e^{i pi/4}) gives V(i) = sqrt2^(#-1) (-1)^Arf.
inline std::complex<double> a_at_t_equals_i() { return std::polar(1.0, 3 * std::numbers::pi / 8); }

/// A = e^{-i pi/8}, the principal choice (t^(1/2) = e^{i pi/4}). Gives
/// (-sqrt2)^(#-1) (-1)^Arf.
inline std::complex<double> a_principal() { return std::polar(1.0, -std::numbers::pi / 8); }

inline std::complex<double> kauffman_at_i(const BraidWord &w) { return jones_polynomial(w).eval_at(a_at_t_equals_i()); }

/// Rewrites a polynomial in A with exponents divisible by 4 as one in t = A^-4.
/// Returns false when some exponent is not a multiple of 4.
inline bool to_t_variable(const Laurent &p, Laurent &out) {
    Laurent r;
    for (auto [e, c] : p.terms()) {
        if (e % 4 != 0) return false;
        r += Laurent::monomial(c, -e / 4);
    }
    out = r;
    return true;
}

}  // namespace mjones

#endif
