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

#include <catch2/catch.hpp>

#include <random>

#include "mirrordim/koszul.hpp"

using namespace mirrordim;

namespace {

const MonomialOrder kDrl{};

std::vector<std::pair<Polynomial, Polynomial>> perturbed_splitting(std::mt19937& rng, int n,
                                                                   int a, int rounds) {
    auto splitting = default_koszul_splitting(n, a, kDrl);
    const int m = n + 2;
    std::uniform_int_distribution<int> pick(0, m - 1);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int r = 0; r < rounds; ++r) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        std::vector<int> e(static_cast<std::size_t>(m));
        for (auto& v : e) v = exp(rng);
        const Polynomial h = Polynomial::monomial(Monomial(std::move(e)), Rational(coef(rng)),
                                                  kDrl);
        // y_i += x_j h and y_j -= x_i h leaves sum x_i y_i unchanged
        splitting[static_cast<std::size_t>(i)].second +=
            splitting[static_cast<std::size_t>(j)].first * h;
        splitting[static_cast<std::size_t>(j)].second -=
            splitting[static_cast<std::size_t>(i)].first * h;
    }
    return splitting;
}

}  // namespace

TEST_CASE("one-variable koszul factorization") {
    const Polynomial w = Polynomial::parse("x1^6", 1, kDrl);
    const Polynomial x = Polynomial::variable(0, 1, kDrl);
    const Polynomial y = Polynomial::parse("x1^5", 1, kDrl);
    const MatrixFactorization mf = build_koszul_mf({{x, y}}, w, 6);
    REQUIRE(mf.half_rank() == 1);
    CHECK(mf.P[0][0] == y);
    CHECK(mf.Q[0][0] == x);
    CHECK(verify_mf(mf, w).pass());
}

TEST_CASE("default koszul factorization of the sextic") {
    const MatrixFactorization mf = koszul_mf(2, 6);
    CHECK(mf.half_rank() == 8);
    CHECK(mf.even_words.size() == 8);
    CHECK(mf.odd_words.size() == 8);
    const MFReport rep = verify_mf(mf, deformed_potential(2, 6, kDrl));
    CHECK(rep.pq_ok);
    CHECK(rep.qp_ok);
    CHECK(rep.homogeneous);
    CHECK(rep.pass());
    CHECK(rep.first_failure.empty());
}

TEST_CASE("entry weights follow the word classes") {
    const MatrixFactorization mf = koszul_mf(2, 6);
    // weight of a word is the class of the sum of its e_i
    for (std::size_t r = 0; r < mf.even_words.size(); ++r) {
        std::vector<long> v(4, 0);
        for (int i = 0; i < 4; ++i)
            if (mf.even_words[r] & (1u << i)) v[static_cast<std::size_t>(i)] = 1;
        CHECK(mf.weights_even[r] == canonical_class(v, 6));
    }
}

TEST_CASE("splitting mismatch is rejected") {
    CHECK_THROWS_AS(
        build_koszul_mf(default_koszul_splitting(2, 6, kDrl), fermat_potential(2, 6, kDrl), 6),
        Error);
}

TEST_CASE("injected faults are detected and located") {
    const Polynomial w = deformed_potential(2, 6, kDrl);
    MatrixFactorization mf = koszul_mf(2, 6);
    mf.P[2][3] += Polynomial::constant(Rational(1), 4, kDrl);
    const MFReport rep = verify_mf(mf, w);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.first_failure.empty());

    MatrixFactorization zeroed = koszul_mf(2, 6);
    const Polynomial zero = Polynomial::zero(4, kDrl);
    for (auto& row : zeroed.P)
        for (auto& e : row) e = zero;
    for (auto& row : zeroed.Q)
        for (auto& e : row) e = zero;
    const MFReport zrep = verify_mf(zeroed, w);
    CHECK_FALSE(zrep.pq_ok);
    CHECK_FALSE(zrep.qp_ok);
}

TEST_CASE("random splittings still factor the potential") {
    std::mt19937 rng(20260308);
    const Polynomial w = deformed_potential(2, 6, kDrl);
    for (int round = 0; round < 5; ++round) {
        const auto splitting = perturbed_splitting(rng, 2, 6, 4);
        const MatrixFactorization mf = build_koszul_mf(splitting, w, 6);
        const MFReport rep = verify_mf(mf, w);
        CHECK(rep.pq_ok);
        CHECK(rep.qp_ok);
    }
}

TEST_CASE("character twists preserve the invariants") {
    const Polynomial w = deformed_potential(2, 6, kDrl);
    const MatrixFactorization mf = koszul_mf(2, 6);
    const CharacterClass c = canonical_class({0, 1, 2, 3}, 6);
    const MatrixFactorization twisted = twist(mf, c);
    const MFReport rep = verify_mf(twisted, w);
    CHECK(rep.pq_ok);
    CHECK(rep.qp_ok);
    CHECK(rep.homogeneous);
}
