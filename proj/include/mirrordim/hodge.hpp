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

#ifndef MIRRORDIM_HODGE_HPP
#define MIRRORDIM_HODGE_HPP

#include <stdexcept>
#include <vector>

#include "mirrordim/rational.hpp"

namespace mirrordim {

// Number of integer vectors of length `parts` with entries in [lo, hi]
// and coordinate sum `target`. Bounded-parts composition DP.
inline BigInt bounded_composition_count(int parts, int lo, int hi, long target) {
    if (parts < 0 || hi < lo) throw std::invalid_argument("bounded_composition_count: bad bounds");
    const long shifted = target - static_cast<long>(parts) * lo;
    const int width = hi - lo;  // entries in [0, width] after shifting
    if (shifted < 0 || shifted > static_cast<long>(parts) * width) return BigInt(0);
    std::vector<BigInt> ways(static_cast<std::size_t>(shifted) + 1);
    ways[0] = 1;
    for (int p = 1; p <= parts; ++p) {
        // prefix sums give the [s - width, s] window in O(1) per cell
        std::vector<BigInt> prefix(ways.size() + 1);
        for (std::size_t s = 0; s < ways.size(); ++s) prefix[s + 1] = prefix[s] + ways[s];
        std::vector<BigInt> next(ways.size());
        for (std::size_t s = 0; s < ways.size(); ++s) {
            const std::size_t from = s > static_cast<std::size_t>(width)
                                         ? s - static_cast<std::size_t>(width)
                                         : 0;
            next[s] = prefix[s + 1] - prefix[from];
        }
        ways = std::move(next);
    }
    return ways.back();
}

// Second route for the same counts: coefficients of
// (t^lo + ... + t^hi)^parts up to max_degree, by repeated polynomial
// multiplication. Kept independent of the DP above for cross-checks.
inline std::vector<BigInt> power_series_coefficients(int parts, int lo, int hi,
                                                     long max_degree) {
    if (parts < 0 || hi < lo)
        throw std::invalid_argument("power_series_coefficients: bad bounds");
    std::vector<BigInt> acc(1, BigInt(1));
    for (int p = 0; p < parts; ++p) {
        std::vector<BigInt> next(
            std::min<std::size_t>(acc.size() + static_cast<std::size_t>(hi),
                                  static_cast<std::size_t>(max_degree) + 1));
        for (std::size_t d = 0; d < acc.size(); ++d) {
            if (acc[d] == 0) continue;
            for (int e = lo; e <= hi; ++e) {
                const std::size_t out = d + static_cast<std::size_t>(e);
                if (out >= next.size()) break;
                next[out] += acc[d];
            }
        }
        acc = std::move(next);
    }
    acc.resize(static_cast<std::size_t>(max_degree) + 1);
    return acc;
}

// Primitive Hodge numbers of a degree-a hypersurface in P^{n+1} via the
// monomial model of the Jacobi ring of the Fermat polynomial: the
// (n-p, p) piece is counted by exponent vectors in [0, a-2]^{n+2} of
// total degree (p+1)a - (n+2).
inline std::vector<BigInt> primitive_hodge(int n, int a) {
    if (n < 2) throw std::invalid_argument("primitive_hodge: n must be >= 2");
    if (a < 3) throw std::invalid_argument("primitive_hodge: a must be >= 3");
    std::vector<BigInt> prim;
    prim.reserve(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p)
        prim.push_back(bounded_composition_count(n + 2, 0, a - 2,
                                                 static_cast<long>(p + 1) * a - (n + 2)));
    return prim;
}

struct HodgeReport {
    int n = 0, a = 0;
    std::vector<BigInt> prim;  // [h^{n-p,p}_prim] for p = 0..n
    BigInt qh_dim, total_even, total_odd;
    bool high_degree = false;
};

// dim QH*(X) as a vector space: the n+1 powers of the hyperplane class
// (even degrees) plus the primitive middle cohomology (degree n).
inline HodgeReport qh_dimension(int n, int a) {
    HodgeReport rep;
    rep.n = n;
    rep.a = a;
    rep.high_degree = a > 2 * n + 1;
    rep.prim = primitive_hodge(n, a);
    BigInt prim_total(0);
    for (const auto& h : rep.prim) prim_total += h;
    rep.qh_dim = BigInt(n + 1) + prim_total;
    if (n % 2 == 0) {
        rep.total_even = rep.qh_dim;
        rep.total_odd = 0;
    } else {
        rep.total_even = n + 1;
        rep.total_odd = prim_total;
    }
    return rep;
}

struct BijectionWitness {
    int p = 0;
    BigInt count_i, count_j;
    bool equal = false;
};

// Counts the (p+1)a - (n+2) slice of [0, a-2]^{n+2} and the (p+1)a slice
// of [1, a-1]^{n+2} by two different algorithms and reports whether they
// match (they are related by adding 1 to every entry).
inline BijectionWitness index_bijection_check(int n, int a, int p) {
    if (p < 0 || p > n) throw std::invalid_argument("index_bijection_check: p out of range");
    BijectionWitness w;
    w.p = p;
    const long target_j = static_cast<long>(p + 1) * a;
    w.count_i = bounded_composition_count(n + 2, 0, a - 2, target_j - (n + 2));
    const auto coeffs = power_series_coefficients(n + 2, 1, a - 1, target_j);
    w.count_j = coeffs[static_cast<std::size_t>(target_j)];
    w.equal = w.count_i == w.count_j;
    return w;
}

}  // namespace mirrordim

#endif
