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

#ifndef MIRRORDIM_GROUP_HPP
#define MIRRORDIM_GROUP_HPP

#include <string>
#include <vector>

#include "mirrordim/errors.hpp"
#include "mirrordim/monomial.hpp"
#include "mirrordim/rational.hpp"

namespace mirrordim {

// Diagonal symmetry groups of the potentials, realized as residue vectors
// (k_1, ..., k_m) in (Z/a)^m with k_1 + ... + k_m = 0 mod a. Variant G acts
// on the n+2 coordinates of the potential; variant H is the n+3 variable
// analogue with an extra leading coordinate.
enum class GroupVariant { G, H };

struct GroupElement {
    std::vector<int> residues;  // each in [0, a)

    bool is_identity() const {
        for (int k : residues)
            if (k != 0) return false;
        return true;
    }
    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.residues == y.residues;
    }
};

class DiagonalGroup {
   public:
    static DiagonalGroup build(GroupVariant variant, int n, int a,
                               unsigned long long enumeration_cap = 100'000'000ULL) {
        if (n < 2) throw std::invalid_argument("DiagonalGroup: n must be >= 2");
        if (a < 3) throw std::invalid_argument("DiagonalGroup: a must be >= 3");
        DiagonalGroup g;
        g.variant_ = variant;
        g.n_ = n;
        g.a_ = a;
        g.num_vars_ = variant == GroupVariant::G ? n + 2 : n + 3;
        BigInt count(1);
        for (int i = 0; i < g.num_vars_ - 1; ++i) count *= a;
        if (count > BigInt(static_cast<unsigned long>(enumeration_cap)))
            throw ResourceExhausted("group of order " + count.get_str() +
                                    " exceeds the enumeration cap of " +
                                    std::to_string(enumeration_cap));
        g.count_ = static_cast<unsigned long long>(count.get_ui());
        return g;
    }

    GroupVariant variant() const { return variant_; }
    int n() const { return n_; }
    int modulus() const { return a_; }
    int num_vars() const { return num_vars_; }
    unsigned long long element_count() const { return count_; }

    GroupElement identity() const { return GroupElement{std::vector<int>(num_vars_, 0)}; }

    // Deterministic enumeration: the first m-1 residues are the base-a
    // digits of idx (least significant first), the last one closes the sum.
    GroupElement element_at(unsigned long long idx) const {
        if (idx >= count_) throw std::invalid_argument("element_at: index out of range");
        std::vector<int> k(num_vars_, 0);
        int sum = 0;
        for (int i = 0; i < num_vars_ - 1; ++i) {
            k[i] = static_cast<int>(idx % a_);
            idx /= a_;
            sum = (sum + k[i]) % a_;
        }
        k[num_vars_ - 1] = (a_ - sum) % a_;
        return GroupElement{std::move(k)};
    }

    bool contains(const GroupElement& g) const {
        if (static_cast<int>(g.residues.size()) != num_vars_) return false;
        long sum = 0;
        for (int k : g.residues) {
            if (k < 0 || k >= a_) return false;
            sum += k;
        }
        return sum % a_ == 0;
    }

    GroupElement add(const GroupElement& x, const GroupElement& y) const {
        GroupElement r = x;
        for (int i = 0; i < num_vars_; ++i) r.residues[i] = (r.residues[i] + y.residues[i]) % a_;
        return r;
    }

    GroupElement inverse(const GroupElement& x) const {
        GroupElement r = x;
        for (int i = 0; i < num_vars_; ++i) r.residues[i] = (a_ - r.residues[i]) % a_;
        return r;
    }

   private:
    GroupVariant variant_ = GroupVariant::G;
    int n_ = 0, a_ = 0, num_vars_ = 0;
    unsigned long long count_ = 0;
};

// A class in Z^m / <a e_i, (1,...,1)>, i.e. a character of the diagonal
// group. Canonical representative: subtract rep[0]*(1,...,1) and reduce
// mod a, so the first coordinate is always 0.
struct CharacterClass {
    int modulus = 0;
    std::vector<int> rep;  // rep[0] == 0, entries in [0, modulus)

    bool is_zero() const {
        for (int v : rep)
            if (v != 0) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rep.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rep[i]);
        }
        return s;
    }

    friend bool operator==(const CharacterClass& x, const CharacterClass& y) {
        return x.modulus == y.modulus && x.rep == y.rep;
    }
    friend bool operator!=(const CharacterClass& x, const CharacterClass& y) { return !(x == y); }
    friend bool operator<(const CharacterClass& x, const CharacterClass& y) {
        if (x.modulus != y.modulus) return x.modulus < y.modulus;
        return x.rep < y.rep;
    }
};

inline CharacterClass canonical_class(const std::vector<long>& v, int a) {
    if (v.empty()) throw std::invalid_argument("canonical_class: empty vector");
    CharacterClass c;
    c.modulus = a;
    c.rep.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        long d = (v[i] - v[0]) % a;
        if (d < 0) d += a;
        c.rep[i] = static_cast<int>(d);
    }
    return c;
}

inline CharacterClass zero_class(int m, int a) {
    CharacterClass c;
    c.modulus = a;
    c.rep.assign(m, 0);
    return c;
}

inline CharacterClass class_add(const CharacterClass& x, const CharacterClass& y) {
    if (x.modulus != y.modulus || x.rep.size() != y.rep.size())
        throw std::invalid_argument("class_add: incompatible classes");
    std::vector<long> v(x.rep.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.rep[i] + y.rep[i];
    return canonical_class(v, x.modulus);
}

inline CharacterClass class_neg(const CharacterClass& x) {
    std::vector<long> v(x.rep.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -x.rep[i];
    return canonical_class(v, x.modulus);
}

// Degree of a monomial in the character lattice: the class of its
// exponent vector.
inline CharacterClass monomial_class(const Monomial& m, int a) {
    std::vector<long> v(m.exps.begin(), m.exps.end());
    return canonical_class(v, a);
}

// Class of a monomial living on a coordinate subset: exponents are lifted
// into the full variable count through var_map (0-based global indices).
inline CharacterClass monomial_class_embedded(const Monomial& m, const std::vector<int>& var_map,
                                              int full_vars, int a) {
    if (static_cast<std::size_t>(m.nvars()) != var_map.size())
        throw std::invalid_argument("monomial_class_embedded: var_map arity mismatch");
    std::vector<long> v(full_vars, 0);
    for (int i = 0; i < m.nvars(); ++i) v[static_cast<std::size_t>(var_map[i])] = m.exps[i];
    return canonical_class(v, a);
}

// I_gamma: 1-based indices of the coordinates fixed by gamma.
inline std::vector<int> fixed_coords(const DiagonalGroup& g, const GroupElement& gamma) {
    if (!g.contains(gamma)) throw std::invalid_argument("fixed_coords: element not in group");
    std::vector<int> fixed;
    for (int i = 0; i < g.num_vars(); ++i)
        if (gamma.residues[i] == 0) fixed.push_back(i + 1);
    return fixed;
}

// dim of the normal directions: coordinates moved by gamma.
inline int normal_dim(const DiagonalGroup& g, const GroupElement& gamma) {
    return g.num_vars() - static_cast<int>(fixed_coords(g, gamma).size());
}

// n_gamma = sum of e_i over the moved coordinates, as a character class.
inline CharacterClass sector_shift(const DiagonalGroup& g, const GroupElement& gamma) {
    if (!g.contains(gamma)) throw std::invalid_argument("sector_shift: element not in group");
    std::vector<long> v(g.num_vars(), 0);
    for (int i = 0; i < g.num_vars(); ++i)
        if (gamma.residues[i] != 0) v[i] = 1;
    return canonical_class(v, g.modulus());
}

}  // namespace mirrordim

#endif
