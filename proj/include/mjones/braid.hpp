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

#ifndef MJONES_BRAID_HPP
#define MJONES_BRAID_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mjones {

/// A braid on `strands` strands. Letter +k is sigma_k (strand k over k+1),
/// letter -k its inverse. Indices are 1-based.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord &) const = default;

    int crossings() const { return static_cast<int>(letters.size()); }
    int max_generator() const {
        int m = 0;
        for (int g : letters) m = std::max(m, std::abs(g));
        return m;
    }
};

class ParseError : public std::runtime_error {
   public:
    ParseError(size_t column, const std::string &what)
        : std::runtime_error("column " + std::to_string(column + 1) + ": " + what), column_(column) {}
    size_t column() const { return column_; }

   private:
    size_t column_;
};

inline void validate(const BraidWord &w) {
    if (w.strands < 1) throw std::invalid_argument("strand count must be positive");
    for (size_t i = 0; i < w.letters.size(); i++) {
        int g = std::abs(w.letters[i]);
        if (g == 0 || g >= w.strands) {
            throw std::invalid_argument("letter " + std::to_string(i + 1) + " (generator " + std::to_string(g) +
                                        ") out of range for " + std::to_string(w.strands) + " strands");
        }
    }
}

namespace detail {

inline bool parse_uint(std::string_view s, int &out) {
    if (s.empty() || s.size() > 9) return false;
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

}  // namespace detail

/// Accepts `s<k>`, `s<k>^-1`, `<k>`, `-<k>` separated by whitespace, with an
/// optional leading `strands=<n>`.
inline BraidWord parse_braid(std::string_view text) {
    struct Tok {
        size_t col;
        std::string_view s;
    };
    std::vector<Tok> toks;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
        size_t b = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) i++;
        if (i > b) toks.push_back({b, text.substr(b, i - b)});
    }

    BraidWord w;
    std::optional<int> strands;
    size_t first = 0;
    if (!toks.empty() && toks[0].s.starts_with("strands=")) {
        int n;
        if (!detail::parse_uint(toks[0].s.substr(8), n) || n < 1) {
            throw ParseError(toks[0].col, "bad strand count '" + std::string(toks[0].s) + "'");
        }
        strands = n;
        first = 1;
    }

    std::vector<size_t> cols;
    for (size_t t = first; t < toks.size(); t++) {
        std::string_view s = toks[t].s;
        int sign = 1;
        int k = -1;
        bool ok;
        if (s.starts_with("s")) {
            std::string_view body = s.substr(1);
            if (body.ends_with("^-1")) {
                sign = -1;
                body.remove_suffix(3);
            }
            ok = detail::parse_uint(body, k);
        } else if (s.starts_with("-")) {
            sign = -1;
            ok = detail::parse_uint(s.substr(1), k);
        } else {
            ok = detail::parse_uint(s, k);
        }
        if (!ok) throw ParseError(toks[t].col, "malformed token '" + std::string(s) + "'");
        if (k == 0) throw ParseError(toks[t].col, "generator index 0 is not allowed");
        w.letters.push_back(sign * k);
        cols.push_back(toks[t].col);
    }

    w.strands = strands ? *strands : w.max_generator() + 1;
    for (size_t t = 0; t < w.letters.size(); t++) {
        if (std::abs(w.letters[t]) >= w.strands) {
            throw ParseError(cols[t], "generator " + std::to_string(std::abs(w.letters[t])) + " out of range for " +
                                          std::to_string(w.strands) + " strands");
        }
    }
    return w;
}

/// Canonical form. The strand count is only written when it differs from the
/// default inferred by parse_braid.
inline std::string to_string(const BraidWord &w) {
    std::string out;
    if (w.strands != w.max_generator() + 1) out = "strands=" + std::to_string(w.strands);
    for (int g : w.letters) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(std::abs(g));
        if (g < 0) out += "^-1";
    }
    return out;
}

/// Reverse-inverse: w * inverse(w) is the identity braid.
inline BraidWord inverse(const BraidWord &w) {
    BraidWord r{w.strands, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

inline BraidWord concat(const BraidWord &a, const BraidWord &b) {
    BraidWord r{std::max(a.strands, b.strands), a.letters};
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

/// sigma_k -> sigma_{n-k}.
inline BraidWord index_mirror(const BraidWord &w) {
    BraidWord r{w.strands, {}};
    for (int g : w.letters) r.letters.push_back(g > 0 ? w.strands - g : -(w.strands + g));
    return r;
}

/// perm[i] is the bottom position reached by the strand entering at top
/// position i (0-based). Letter signs do not matter.
inline std::vector<int> closure_permutation(const BraidWord &w) {
    validate(w);
    std::vector<int> at(w.strands);
    std::iota(at.begin(), at.end(), 0);
    for (int g : w.letters) std::swap(at[std::abs(g) - 1], at[std::abs(g)]);
    std::vector<int> perm(w.strands);
    for (int p = 0; p < w.strands; p++) perm[at[p]] = p;
    return perm;
}

struct LinkInvariants {
    int writhe = 0;
    int components = 0;
    std::vector<int> component_of_strand;
    std::vector<std::vector<int>> linking;
    bool proper = true;

    int lk(int i, int j) const { return linking[i][j]; }
};

inline LinkInvariants link_invariants(const BraidWord &w) {
    auto perm = closure_permutation(w);
    LinkInvariants inv;
    inv.component_of_strand.assign(w.strands, -1);
    for (int s = 0; s < w.strands; s++) {
        if (inv.component_of_strand[s] >= 0) continue;
        for (int t = s; inv.component_of_strand[t] < 0; t = perm[t]) inv.component_of_strand[t] = inv.components;
        inv.components++;
    }

    int c = inv.components;
    std::vector<std::vector<int>> twice(c, std::vector<int>(c, 0));
    std::vector<int> at(w.strands);
    std::iota(at.begin(), at.end(), 0);
    for (int g : w.letters) {
        int k = std::abs(g);
        int ci = inv.component_of_strand[at[k - 1]];
        int cj = inv.component_of_strand[at[k]];
        if (ci != cj) {
            int s = g > 0 ? 1 : -1;
            twice[ci][cj] += s;
            twice[cj][ci] += s;
        }
        std::swap(at[k - 1], at[k]);
        inv.writhe += g > 0 ? 1 : -1;
    }

    inv.linking.assign(c, std::vector<int>(c, 0));
    for (int i = 0; i < c; i++) {
        for (int j = 0; j < c; j++) {
            if (twice[i][j] % 2 != 0) throw std::logic_error("odd inter-component crossing count");
            inv.linking[i][j] = twice[i][j] / 2;
        }
    }
    for (int k = 0; k < c; k++) {
        int total = 0;
        for (int j = 0; j < c; j++) total += inv.linking[j][k];
        if (total % 2 != 0) inv.proper = false;
    }
    return inv;
}

/// Self-linking and Milnor data, which are supplied rather than computed.
/// c3 is indexed by triples i<j<k in lexicographic order.
struct ArfData {
    std::vector<int> c1;
    std::vector<int> c3;
};

inline int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

inline int c2_pair(long long lk) { return mod2(lk * (lk * lk - 1) / 6); }

inline size_t triple_count(int n) { return n < 3 ? 0 : static_cast<size_t>(n) * (n - 1) * (n - 2) / 6; }

inline int arf_invariant(const LinkInvariants &inv, const ArfData &data) {
    if (!inv.proper) throw std::invalid_argument("Arf invariant is undefined for a non-proper link");
    if (data.c1.size() != static_cast<size_t>(inv.components)) {
        throw std::invalid_argument("c1 needs one entry per component");
    }
    if (!data.c3.empty() && data.c3.size() != triple_count(inv.components)) {
        throw std::invalid_argument("c3 needs one entry per component triple");
    }
    long long s = 0;
    for (int v : data.c1) s += v;
    for (int i = 0; i < inv.components; i++) {
        for (int j = i + 1; j < inv.components; j++) s += c2_pair(inv.linking[i][j]);
    }
    for (int v : data.c3) s += v;
    return mod2(s);
}

/// V_L(i) from the Arf invariant: 0 for non-proper links, else
/// sqrt(2)^(#L-1) * (-1)^arf.
inline double jones_from_arf(const LinkInvariants &inv, std::optional<int> arf) {
    if (!inv.proper) {
        if (arf) throw std::invalid_argument("Arf value supplied for a non-proper link");
        return 0.0;
    }
    if (!arf) throw std::invalid_argument("proper link needs an Arf value");
    double mag = std::pow(std::sqrt(2.0), inv.components - 1);
    return mod2(*arf) ? -mag : mag;
}

}  // namespace mjones

#endif
