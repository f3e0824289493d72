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

#ifndef MIRRORDIM_KOSZUL_HPP
#define MIRRORDIM_KOSZUL_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mirrordim/group.hpp"
#include "mirrordim/polynomial.hpp"

namespace mirrordim {

// Koszul-type matrix factorization of a potential w = sum x_i * y_i on
// the exterior algebra over the splitting indices. Basis words are
// bitmasks; the word e_{i_1} ^ ... ^ e_{i_k} carries the character class
// of e_{i_1} + ... + e_{i_k}.
struct MatrixFactorization {
    int nvars = 0;
    int modulus = 0;  // character lattice modulus
    std::vector<std::uint32_t> even_words, odd_words;
    // P: odd -> even, Q: even -> odd; P*Q = Q*P = w * Id.
    std::vector<std::vector<Polynomial>> P, Q;
    std::vector<CharacterClass> weights_even, weights_odd;

    std::size_t half_rank() const { return even_words.size(); }
};

inline std::string word_string(std::uint32_t word, int k) {
    if (word == 0) return "1";
    std::string s;
    for (int i = 0; i < k; ++i)
        if (word & (1u << i)) {
            if (!s.empty()) s += '^';
            s += 'e';
            s += std::to_string(i + 1);
        }
    return s;
}

// (x_i, y_i) with sum x_i y_i = w - x_1...x_m: the product term is folded
// into y_1.
inline std::vector<std::pair<Polynomial, Polynomial>> default_koszul_splitting(
    int n, int a, MonomialOrder order = MonomialOrder{}) {
    if (n < 2) throw std::invalid_argument("default_koszul_splitting: n must be >= 2");
    if (a < 3) throw std::invalid_argument("default_koszul_splitting: a must be >= 3");
    const int m = n + 2;
    std::vector<std::pair<Polynomial, Polynomial>> splitting;
    for (int i = 0; i < m; ++i) {
        Polynomial x = Polynomial::variable(i, m, order);
        Polynomial y = Polynomial::monomial(Monomial::var(i, m, a - 1), Rational(1), order);
        if (i == 0) {
            std::vector<int> rest(static_cast<std::size_t>(m), 1);
            rest[0] = 0;
            y -= Polynomial::monomial(Monomial(std::move(rest)), Rational(1), order);
        }
        splitting.emplace_back(std::move(x), std::move(y));
    }
    return splitting;
}

namespace detail {

inline int wedge_sign(std::uint32_t word, int i) {
    const std::uint32_t below = word & ((1u << i) - 1u);
    return std::popcount(below) % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Assembles the Koszul differential d = sum_i (x_i e_i^ + y_i iota_i) and
// splits it into the two parity blocks. Throws unless the splitting
// multiplies out to the given potential.
inline MatrixFactorization build_koszul_mf(
    const std::vector<std::pair<Polynomial, Polynomial>>& splitting, const Polynomial& w,
    int modulus) {
    if (splitting.empty()) throw std::invalid_argument("build_koszul_mf: empty splitting");
    const int k = static_cast<int>(splitting.size());
    if (k > 20) throw std::invalid_argument("build_koszul_mf: splitting too large");
    Polynomial total = Polynomial::zero(w.nvars(), w.order());
    for (const auto& [x, y] : splitting) total += x * y;
    if (total != w) throw Error("splitting mismatch: sum x_i*y_i differs from the potential");

    MatrixFactorization mf;
    mf.nvars = w.nvars();
    mf.modulus = modulus;
    const std::uint32_t words = 1u << k;
    std::vector<std::size_t> position(words, 0);
    for (std::uint32_t word = 0; word < words; ++word) {
        if (std::popcount(word) % 2 == 0) {
            position[word] = mf.even_words.size();
            mf.even_words.push_back(word);
        } else {
            position[word] = mf.odd_words.size();
            mf.odd_words.push_back(word);
        }
    }
    auto weight_of = [&](std::uint32_t word) {
        std::vector<long> v(static_cast<std::size_t>(mf.nvars), 0);
        for (int i = 0; i < k; ++i)
            if (word & (1u << i)) v[static_cast<std::size_t>(i) % mf.nvars] += 1;
        return canonical_class(v, modulus);
    };
    for (std::uint32_t word : mf.even_words) mf.weights_even.push_back(weight_of(word));
    for (std::uint32_t word : mf.odd_words) mf.weights_odd.push_back(weight_of(word));

    const std::size_t half = mf.even_words.size();
    const Polynomial zero = Polynomial::zero(w.nvars(), w.order());
    mf.P.assign(half, std::vector<Polynomial>(mf.odd_words.size(), zero));
    mf.Q.assign(mf.odd_words.size(), std::vector<Polynomial>(half, zero));

    auto emit = [&](std::uint32_t from, std::uint32_t to, const Polynomial& entry) {
        const bool from_even = std::popcount(from) % 2 == 0;
        if (from_even)
            mf.Q[position[to]][position[from]] += entry;
        else
            mf.P[position[to]][position[from]] += entry;
    };
    for (std::uint32_t word = 0; word < words; ++word) {
        for (int i = 0; i < k; ++i) {
            const int sign = detail::wedge_sign(word, i);
            const Rational s(sign);
            if (!(word & (1u << i)))
                emit(word, word | (1u << i), s * splitting[static_cast<std::size_t>(i)].first);
            else
                emit(word, word & ~(1u << i), s * splitting[static_cast<std::size_t>(i)].second);
        }
    }
    return mf;
}

inline MatrixFactorization koszul_mf(int n, int a, MonomialOrder order = MonomialOrder{}) {
    return build_koszul_mf(default_koszul_splitting(n, a, order), deformed_potential(n, a, order),
                           a);
}

inline MatrixFactorization koszul_mf(int n, int a,
                                     const std::vector<std::pair<Polynomial, Polynomial>>& split,
                                     MonomialOrder order = MonomialOrder{}) {
    return build_koszul_mf(split, deformed_potential(n, a, order), a);
}

// Tensoring by a character shifts every weight; the defining identities
// are untouched.
inline MatrixFactorization twist(MatrixFactorization mf, const CharacterClass& c) {
    for (auto& w : mf.weights_even) w = class_add(w, c);
    for (auto& w : mf.weights_odd) w = class_add(w, c);
    return mf;
}

struct MFReport {
    bool pq_ok = false, qp_ok = false, homogeneous = false;
    std::string first_failure;  // empty when everything holds

    bool pass() const { return pq_ok && qp_ok && homogeneous; }
};

inline MFReport verify_mf(const MatrixFactorization& mf, const Polynomial& w) {
    MFReport rep;
    rep.pq_ok = rep.qp_ok = rep.homogeneous = true;
    const std::size_t he = mf.even_words.size(), ho = mf.odd_words.size();
    const Polynomial zero = Polynomial::zero(w.nvars(), w.order());

    auto check_product = [&](const auto& A, const auto& B, std::size_t dim, std::size_t inner,
                             const char* name, bool& ok) {
        for (std::size_t r = 0; r < dim && ok; ++r)
            for (std::size_t c = 0; c < dim && ok; ++c) {
                Polynomial entry = zero;
                for (std::size_t t = 0; t < inner; ++t) entry += A[r][t] * B[t][c];
                const Polynomial expected = r == c ? w : zero;
                if (entry != expected) {
                    ok = false;
                    if (rep.first_failure.empty())
                        rep.first_failure = std::string(name) + " entry (" + std::to_string(r) +
                                            ", " + std::to_string(c) + ")";
                }
            }
    };
    check_product(mf.P, mf.Q, he, ho, "P*Q", rep.pq_ok);
    check_product(mf.Q, mf.P, ho, he, "Q*P", rep.qp_ok);

    auto check_block = [&](const auto& block, const auto& row_weights, const auto& col_weights,
                           const char* name) {
        for (std::size_t r = 0; r < block.size() && rep.homogeneous; ++r)
            for (std::size_t c = 0; c < block[r].size() && rep.homogeneous; ++c) {
                const Polynomial& entry = block[r][c];
                if (entry.is_zero()) continue;
                const CharacterClass want =
                    class_add(row_weights[r], class_neg(col_weights[c]));
                for (const auto& t : entry.terms())
                    if (monomial_class(t.mono, mf.modulus) != want) {
                        rep.homogeneous = false;
                        if (rep.first_failure.empty())
                            rep.first_failure = std::string(name) + " entry (" +
                                                std::to_string(r) + ", " + std::to_string(c) +
                                                ") not homogeneous";
                        break;
                    }
            }
    };
    check_block(mf.P, mf.weights_even, mf.weights_odd, "P");
    check_block(mf.Q, mf.weights_odd, mf.weights_even, "Q");
    return rep;
}

}  // namespace mirrordim

#endif
