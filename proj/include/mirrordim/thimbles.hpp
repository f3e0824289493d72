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

#ifndef MIRRORDIM_THIMBLES_HPP
#define MIRRORDIM_THIMBLES_HPP

#include <string>
#include <vector>

#include "mirrordim/errors.hpp"

namespace mirrordim {

// Index of a Lefschetz thimble generator: a vector in {1, ..., a-1}^{n+1}.
struct ThimbleIndex {
    std::vector<int> entries;

    friend bool operator==(const ThimbleIndex& x, const ThimbleIndex& y) {
        return x.entries == y.entries;
    }
};

inline void validate_thimble_index(const ThimbleIndex& idx, int n, int a) {
    if (static_cast<int>(idx.entries.size()) != n + 1)
        throw std::invalid_argument("thimble index must have n+1 entries");
    for (int v : idx.entries)
        if (v < 1 || v > a - 1)
            throw std::invalid_argument("thimble index entry out of [1, a-1]");
}

// Hom-spaces between thimbles are free modules over the loop ring
// k[s^{+-a}]; only the rank and the generator words are modeled. Words
// are lists of odd-symbol indices in {1, ..., n+2}; the empty word is
// the unit.
struct HomDescriptor {
    enum class Case { disjoint, forward, backward, diagonal };

    Case kind = Case::disjoint;
    int rank = 0;
    std::vector<std::vector<int>> generators;

    static const char* case_name(Case c) {
        switch (c) {
            case Case::disjoint: return "disjoint";
            case Case::forward: return "forward";
            case Case::backward: return "backward";
            case Case::diagonal: return "diagonal";
        }
        return "?";
    }
};

inline std::string generator_word_string(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += '*';
        s += "dbar" + std::to_string(word[k]);
    }
    return s;
}

inline HomDescriptor hom_descriptor(const ThimbleIndex& i, const ThimbleIndex& j, int n, int a) {
    validate_thimble_index(i, n, a);
    validate_thimble_index(j, n, a);
    HomDescriptor d;
    if (i == j) {
        d.kind = HomDescriptor::Case::diagonal;
        d.rank = 2;
        d.generators.push_back({});  // the unit
        std::vector<int> full;
        for (int l = 1; l <= n + 2; ++l) full.push_back(l);
        d.generators.push_back(std::move(full));
        return d;
    }
    bool forward = true, backward = true;
    for (int l = 0; l <= n; ++l) {
        const int diff = j.entries[static_cast<std::size_t>(l)] -
                         i.entries[static_cast<std::size_t>(l)];
        if (diff < 0 || diff > 1) forward = false;
        if (diff > 0 || diff < -1) backward = false;
    }
    if (forward) {
        d.kind = HomDescriptor::Case::forward;
        d.rank = 1;
        std::vector<int> word;
        for (int l = 0; l <= n; ++l)
            if (j.entries[static_cast<std::size_t>(l)] -
                    i.entries[static_cast<std::size_t>(l)] ==
                1)
                word.push_back(l + 1);
        d.generators.push_back(std::move(word));
    } else if (backward) {
        d.kind = HomDescriptor::Case::backward;
        d.rank = 1;
        std::vector<int> word;
        for (int l = 0; l <= n; ++l)
            if (i.entries[static_cast<std::size_t>(l)] -
                    j.entries[static_cast<std::size_t>(l)] !=
                1)
                word.push_back(l + 1);
        word.push_back(n + 2);
        d.generators.push_back(std::move(word));
    }
    return d;
}

struct GraphSummary {
    unsigned long long vertices = 0;
    unsigned long long edges = 0;
    unsigned long long components = 0;
};

// Graph on all thimble indices with edges where the off-diagonal hom is
// nonzero, i.e. where the coordinatewise difference lies in {0,1}^{n+1}
// or {0,-1}^{n+1}.
inline GraphSummary hom_graph(int n, int a, unsigned long long vertex_cap = 1'000'000ULL) {
    if (n < 2) throw std::invalid_argument("hom_graph: n must be >= 2");
    if (a < 3) throw std::invalid_argument("hom_graph: a must be >= 3");
    const int dims = n + 1;
    unsigned long long count = 1;
    for (int i = 0; i < dims; ++i) {
        count *= static_cast<unsigned long long>(a - 1);
        if (count > vertex_cap)
            throw ResourceExhausted("hom graph vertex cap of " + std::to_string(vertex_cap) +
                                    " exceeded");
    }
    auto decode = [&](unsigned long long idx) {
        std::vector<int> v(static_cast<std::size_t>(dims));
        for (int k = 0; k < dims; ++k) {
            v[static_cast<std::size_t>(k)] = 1 + static_cast<int>(idx % (a - 1));
            idx /= static_cast<unsigned long long>(a - 1);
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        unsigned long long idx = 0;
        for (int k = dims - 1; k >= 0; --k)
            idx = idx * static_cast<unsigned long long>(a - 1) +
                  static_cast<unsigned long long>(v[static_cast<std::size_t>(k)] - 1);
        return idx;
    };

    GraphSummary g;
    g.vertices = count;
    std::vector<char> visited(count, 0);
    std::vector<unsigned long long> stack;
    const unsigned long long deltas = 1ULL << dims;
    for (unsigned long long start = 0; start < count; ++start) {
        if (visited[start]) continue;
        ++g.components;
        visited[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const unsigned long long cur = stack.back();
            stack.pop_back();
            const std::vector<int> v = decode(cur);
            for (int sign : {+1, -1}) {
                for (unsigned long long mask = 1; mask < deltas; ++mask) {
                    std::vector<int> w = v;
                    bool ok = true;
                    for (int k = 0; k < dims && ok; ++k)
                        if (mask & (1ULL << k)) {
                            w[static_cast<std::size_t>(k)] += sign;
                            if (w[static_cast<std::size_t>(k)] < 1 ||
                                w[static_cast<std::size_t>(k)] > a - 1)
                                ok = false;
                        }
                    if (!ok) continue;
                    const unsigned long long nb = encode(w);
                    if (sign > 0) ++g.edges;  // each unordered edge counted once
                    if (!visited[nb]) {
                        visited[nb] = 1;
                        stack.push_back(nb);
                    }
                }
            }
        }
    }
    return g;
}

struct BoundItem {
    std::string name;
    std::string detail;
    bool pass = false;
};

struct BoundsReport {
    int n = 0, a = 0;
    std::vector<BoundItem> items;
    bool all_pass = false;
};

// The three numerical inequalities behind the high-degree assumption:
// a > 2n+1, the Maslov estimate 2 + 2(a-n-2) >= 2n+2 > dim C = 2n+1, and
// the grading separation 0 != n mod 2(a-n-2).
inline BoundsReport check_degree_bounds(int n, int a) {
    if (n < 2) throw std::invalid_argument("check_degree_bounds: n must be >= 2");
    if (a < 3) throw std::invalid_argument("check_degree_bounds: a must be >= 3");
    BoundsReport rep;
    rep.n = n;
    rep.a = a;

    BoundItem high;
    high.name = "high_degree";
    high.pass = a > 2 * n + 1;
    high.detail = std::to_string(a) + (high.pass ? " > " : " <= ") + std::to_string(2 * n + 1);
    rep.items.push_back(high);

    BoundItem maslov;
    maslov.name = "maslov_estimate";
    const int lower = 2 + 2 * (a - n - 2);
    const int dim_c = 2 * n + 1;
    maslov.pass = lower >= 2 * n + 2 && lower > dim_c;
    maslov.detail = "2+2(a-n-2) = " + std::to_string(lower) + " vs 2n+2 = " +
                    std::to_string(2 * n + 2) + ", dim C = " + std::to_string(dim_c);
    rep.items.push_back(maslov);

    BoundItem sep;
    sep.name = "grading_separation";
    const int modulus = 2 * (a - n - 2);
    sep.pass = modulus > 0 && n % modulus != 0;
    sep.detail = "n = " + std::to_string(n) + " mod 2(a-n-2) = " + std::to_string(modulus);
    rep.items.push_back(sep);

    rep.all_pass = high.pass && maslov.pass && sep.pass;
    return rep;
}

}  // namespace mirrordim

#endif
