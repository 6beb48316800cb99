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

#ifndef MJONES_LAURENT_HPP
#define MJONES_LAURENT_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace mjones {

/// Integer Laurent polynomial in one variable (A). Zero coefficients are never
/// stored. Arithmetic throws std::overflow_error instead of wrapping.
class Laurent {
   public:
    Laurent() = default;
    Laurent(int64_t c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[0] = c;
    }
    static Laurent monomial(int64_t c, int exp) {
        Laurent p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }

    const std::map<int, int64_t> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int64_t coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Laurent &operator+=(const Laurent &o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent &operator-=(const Laurent &o) {
        for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
    friend Laurent operator*(const Laurent &a, const Laurent &b) {
        Laurent r;
        for (auto [ea, ca] : a.terms_) {
            for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
        }
        return r;
    }
    Laurent &operator*=(const Laurent &o) { return *this = *this * o; }
    bool operator==(const Laurent &) const = default;

    Laurent pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
        Laurent r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    /// Substitutes A -> A^k for nonzero k.
    Laurent substitute_power(int k) const {
        if (k == 0) throw std::invalid_argument("substitution exponent must be nonzero");
        Laurent r;
        for (auto [e, c] : terms_) r.terms_[e * k] = c;
        return r;
    }

    std::complex<double> eval_at(std::complex<double> a) const {
        if (a == 0.0 && !terms_.empty() && terms_.begin()->first < 0) {
            throw std::domain_error("evaluating negative powers at zero");
        }
        std::complex<double> s = 0;
        for (auto [e, c] : terms_) s += static_cast<double>(c) * ipow(a, e);
        return s;
    }

    /// Ascending exponents, `<coeff>*A^<exp>` joined by ` + `.
    std::string str(const std::string &var = "A") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto [e, c] : terms_) {
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            uint64_t mag = c < 0 ? 0 - static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
            if (e == 0) {
                out += std::to_string(mag);
                continue;
            }
            if (mag != 1) out += std::to_string(mag) + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    static std::complex<double> ipow(std::complex<double> a, int e) {
        if (e < 0) return 1.0 / ipow(a, -e);
        std::complex<double> r = 1, b = a;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

   private:
    static int64_t checked_mul(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
        return r;
    }
    void add_term(int e, int64_t c) {
        int64_t &slot = terms_[e];
        if (__builtin_add_overflow(slot, c, &slot)) throw std::overflow_error("Laurent coefficient overflow");
        if (slot == 0) terms_.erase(e);
    }

    std::map<int, int64_t> terms_;
};

}  // namespace mjones

#endif
