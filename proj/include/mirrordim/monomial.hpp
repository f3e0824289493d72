/*
   Copyright 2026 The mirrordim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MIRRORDIM_MONOMIAL_HPP
#define MIRRORDIM_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrordim {

// Dense exponent vector, length fixed by the ring context.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {
        for (int v : exps)
            if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    static Monomial var(int i, int nvars, int power = 1) {
        std::vector<int> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int v) { return v == 0; });
    }
    int operator[](int i) const { return exps[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Container ordering only; term ordering lives in MonomialOrder.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) return false;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars(); ++i) r.exps[i] += b.exps[i];
    return r;
}

// b / a, defined only when a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (int i = 0; i < b.nvars(); ++i) {
        r.exps[i] -= a.exps[i];
        if (r.exps[i] < 0) throw std::invalid_argument("quotient: not divisible");
    }
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

// Variables print 1-based: x1, x2, ...
inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i + 1);
        if (m.exps[i] > 1) {
            s += '^';
            s += std::to_string(m.exps[i]);
        }
    }
    return s;
}

// Total orders on monomials. All three kinds are global (1 is minimal) and
// multiplicative. The optional permutation reindexes variables before
// comparison.
struct MonomialOrder {
    enum class Kind { degrevlex, deglex, lex };

    Kind kind = Kind::degrevlex;
    std::vector<int> perm;  // empty means identity

    static MonomialOrder make(Kind k, std::vector<int> p = {}) {
        MonomialOrder o;
        o.kind = k;
        o.perm = std::move(p);
        return o;
    }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        const int n = a.nvars();
        if (n != b.nvars()) throw std::invalid_argument("MonomialOrder: arity mismatch");
        auto at = [&](const Monomial& m, int i) {
            return perm.empty() ? m.exps[i] : m.exps[static_cast<std::size_t>(perm[i])];
        };
        if (kind != Kind::lex) {
            const int da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
        }
        if (kind == Kind::degrevlex) {
            for (int i = n - 1; i >= 0; --i) {
                const int ea = at(a, i), eb = at(b, i);
                if (ea != eb) return ea > eb ? -1 : 1;
            }
            return 0;
        }
        for (int i = 0; i < n; ++i) {
            const int ea = at(a, i), eb = at(b, i);
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string name() const {
        switch (kind) {
            case Kind::degrevlex: return "degrevlex";
            case Kind::deglex: return "deglex";
            case Kind::lex: return "lex";
        }
        return "?";
    }

    static MonomialOrder named(const std::string& s) {
        if (s == "degrevlex") return make(Kind::degrevlex);
        if (s == "deglex") return make(Kind::deglex);
        if (s == "lex") return make(Kind::lex);
        throw std::invalid_argument("unknown monomial order '" + s + "'");
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.perm == b.perm;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }
};

}  // namespace mirrordim

#endif
