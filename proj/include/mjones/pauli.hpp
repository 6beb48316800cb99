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

#ifndef MJONES_PAULI_HPP
#define MJONES_PAULI_HPP

#include <bit>
#include <cctype>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace mjones {

inline constexpr int kMaxQubits = 11;

/// i^phase * prod_s X_s^{x_s} Z_s^{z_s} on n qubits. Site s (1-based) lives
/// at bit n-s, so site 1 is the most significant bit of a basis index.
struct PauliString {
    int n = 0;
    uint32_t x = 0;
    uint32_t z = 0;
    int phase = 0;

    bool operator==(const PauliString &) const = default;

    static uint32_t bit(int n, int site) {
        if (site < 1 || site > n) throw std::out_of_range("site " + std::to_string(site) + " outside 1.." + std::to_string(n));
        return uint32_t{1} << (n - site);
    }

    static PauliString identity(int n) { return {n, 0, 0, 0}; }

    /// Single-site X, Y or Z.
    static PauliString single(int n, int site, char axis) {
        uint32_t b = bit(n, site);
        switch (std::tolower(axis)) {
            case 'x':
                return {n, b, 0, 0};
            case 'z':
                return {n, 0, b, 0};
            case 'y':
                return {n, b, b, 1};  // Y = i X Z
            default:
                throw std::invalid_argument(std::string("unknown Pauli axis '") + axis + "'");
        }
    }

    std::complex<double> phase_factor() const {
        static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[phase & 3];
    }

    friend PauliString operator*(const PauliString &a, const PauliString &b) {
        if (a.n != b.n) throw std::invalid_argument("Pauli strings on different qubit counts");
        // Z^{z_a} X^{x_b} = (-1)^{z_a . x_b} X^{x_b} Z^{z_a}
        int sign = 2 * std::popcount(a.z & b.x);
        return {a.n, a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + sign) & 3};
    }

    PauliString scaled_by_i(int k) const { return {n, x, z, (phase + k) & 3}; }

    bool commutes_with(const PauliString &o) const {
        return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
    }

    /// Hermitian iff i^phase times the number of Y factors is real.
    bool is_hermitian() const { return ((phase + std::popcount(x & z)) & 1) == 0; }

    /// Sign s with *this = s * (plain product of X/Y/Z); needs is_hermitian().
    int hermitian_sign() const {
        if (!is_hermitian()) throw std::logic_error("Pauli string is not Hermitian");
        return ((phase + std::popcount(x & z) * 3) & 3) == 0 ? 1 : -1;
    }

    char axis(int site) const {
        uint32_t b = bit(n, site);
        bool hx = x & b, hz = z & b;
        return hx ? (hz ? 'Y' : 'X') : (hz ? 'Z' : 'I');
    }
};

/// Real coefficient times a product of X/Y/Z factors, e.g. -X2X3.
struct PauliTerm {
    double coefficient = 1.0;
    std::map<int, char> factors;  // site -> 'X' | 'Y' | 'Z'

    bool operator==(const PauliTerm &) const = default;

    PauliString to_string_op(int n) const {
        PauliString p = PauliString::identity(n);
        for (auto [site, axis] : factors) p = p * PauliString::single(n, site, axis);
        return p;
    }

    /// For unit coefficients, the exact signed Pauli string.
    PauliString signed_op(int n) const {
        if (coefficient != 1.0 && coefficient != -1.0) throw std::invalid_argument("signed_op needs a +-1 coefficient");
        PauliString p = to_string_op(n);
        return coefficient < 0 ? p.scaled_by_i(2) : p;
    }

    PauliTerm negated() const { return {-coefficient, factors}; }

    std::string str() const {
        std::string out;
        if (coefficient == 1.0) {
            out = "+";
        } else if (coefficient == -1.0) {
            out = "-";
        } else {
            out = std::to_string(coefficient) + "*";
        }
        if (factors.empty()) out += "I";
        for (auto [site, axis] : factors) out += axis + std::to_string(site);
        return out;
    }

    static PauliTerm from_hermitian(const PauliString &p) {
        PauliTerm t{static_cast<double>(p.hermitian_sign()), {}};
        for (int s = 1; s <= p.n; s++) {
            char a = p.axis(s);
            if (a != 'I') t.factors[s] = a;
        }
        return t;
    }
};

/// Parses "+X3Y4", "-Y5Z6X7", "Z4" (case-insensitive axes).
inline PauliTerm parse_term(const std::string &text) {
    PauliTerm t;
    size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') t.coefficient = -1.0;
        i++;
    }
    if (i == text.size()) throw std::invalid_argument("empty Pauli term '" + text + "'");
    while (i < text.size()) {
        char axis = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (axis != 'X' && axis != 'Y' && axis != 'Z') {
            throw std::invalid_argument("bad Pauli axis in '" + text + "' at " + std::to_string(i));
        }
        i++;
        size_t b = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
        if (b == i) throw std::invalid_argument("missing site index in '" + text + "'");
        int site = std::stoi(text.substr(b, i - b));
        if (site < 1) throw std::invalid_argument("site index must be >= 1 in '" + text + "'");
        if (!t.factors.emplace(site, axis).second) throw std::invalid_argument("repeated site in '" + text + "'");
    }
    return t;
}

}  // namespace mjones

#endif
