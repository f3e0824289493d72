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

#include "mirrordim/polynomial.hpp"

using namespace mirrordim;

namespace {

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms,
                       MonomialOrder order = MonomialOrder{}) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_deg);
    std::uniform_int_distribution<long> coef(-6, 6);
    std::vector<Term> terms;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = exp(rng);
        terms.push_back({Monomial(std::move(e)), Rational(coef(rng))});
    }
    return Polynomial::from_terms(std::move(terms), nvars, order);
}

Monomial random_monomial(std::mt19937& rng, int nvars, int max_exp) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (auto& v : e) v = exp(rng);
    return Monomial(std::move(e));
}

}  // namespace

TEST_CASE("fermat potential instances") {
    const Polynomial w26 = fermat_potential(2, 6);
    CHECK(w26 == Polynomial::parse("x1^6 + x2^6 + x3^6 + x4^6", 4, MonomialOrder{}));

    const Polynomial w23 = fermat_potential(2, 3);
    CHECK(w23 == Polynomial::parse("x1^3 + x2^3 + x3^3 + x4^3", 4, MonomialOrder{}));

    const Polynomial w38 = fermat_potential(3, 8);
    CHECK(w38.nvars() == 5);
    CHECK(w38.num_terms() == 5);
    for (const auto& t : w38.terms()) CHECK(t.mono.degree() == 8);
}

TEST_CASE("potential preconditions") {
    CHECK_THROWS_AS(fermat_potential(1, 6), std::invalid_argument);
    CHECK_THROWS_AS(fermat_potential(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(deformed_potential(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(deformed_potential(3, 1), std::invalid_argument);
}

TEST_CASE("deformed potential and its partials") {
    const Polynomial w = deformed_potential(2, 6);
    CHECK(w == Polynomial::parse("x1^6 + x2^6 + x3^6 + x4^6 - x1*x2*x3*x4", 4, MonomialOrder{}));

    const auto dw = partials(w);
    REQUIRE(dw.size() == 4);
    CHECK(dw[0] == Polynomial::parse("6*x1^5 - x2*x3*x4", 4, MonomialOrder{}));
    CHECK(dw[3] == Polynomial::parse("6*x4^5 - x1*x2*x3", 4, MonomialOrder{}));

    const std::vector<Rational> origin(4, Rational(0));
    CHECK(w.eval(origin) == 0);

    const std::vector<Rational> ones(4, Rational(1));
    CHECK(w.eval(ones) == 3);  // 4 - 1
}

TEST_CASE("partials of simple inputs") {
    const Polynomial x2 = Polynomial::parse("x1^2", 1, MonomialOrder{});
    const auto d = partials(x2);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == Polynomial::parse("2*x1", 1, MonomialOrder{}));

    const Polynomial one = Polynomial::constant(Rational(1), 3, MonomialOrder{});
    for (const auto& p : partials(one)) CHECK(p.is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20260301);
    for (int round = 0; round < 40; ++round) {
        const Polynomial f = random_poly(rng, 3, 3, 5);
        const Polynomial g = random_poly(rng, 3, 3, 5);
        const Polynomial h = random_poly(rng, 3, 3, 5);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f - f).is_zero());
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("binomial coefficients are exact") {
    const MonomialOrder order{};
    const Polynomial xp1 = Polynomial::parse("x1 + 1", 1, order);
    for (unsigned k = 0; k <= 20; ++k) {
        const Polynomial p = xp1.pow(k);
        for (unsigned i = 0; i <= k; ++i) {
            BigInt expected;
            mpz_bin_uiui(expected.get_mpz_t(), k, i);
            CHECK(p.coeff(Monomial::var(0, 1, static_cast<int>(i))) == Rational(expected));
        }
    }
}

TEST_CASE("Leibniz rule on random polynomials") {
    std::mt19937 rng(20260302);
    for (int round = 0; round < 30; ++round) {
        const Polynomial f = random_poly(rng, 3, 3, 4);
        const Polynomial g = random_poly(rng, 3, 3, 4);
        for (int v = 0; v < 3; ++v)
            CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
    }
}

TEST_CASE("monomial orders are total, multiplicative and global") {
    std::mt19937 rng(20260303);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::named("degrevlex"), MonomialOrder::named("deglex"),
        MonomialOrder::named("lex"),
        MonomialOrder::make(MonomialOrder::Kind::degrevlex, {2, 0, 3, 1})};
    for (const auto& ord : orders) {
        for (int round = 0; round < 200; ++round) {
            const Monomial u = random_monomial(rng, 4, 5);
            const Monomial v = random_monomial(rng, 4, 5);
            const Monomial w = random_monomial(rng, 4, 5);
            const int c = ord.compare(u, v);
            CHECK(c == -ord.compare(v, u));
            CHECK((c == 0) == (u == v));
            if (c < 0) CHECK(ord.compare(mul(u, w), mul(v, w)) < 0);
            CHECK(ord.compare(Monomial::one(4), u) <= 0);
        }
    }
}

TEST_CASE("canonical text form round-trips") {
    std::mt19937 rng(20260304);
    for (int round = 0; round < 25; ++round) {
        const Polynomial f = random_poly(rng, 4, 4, 6);
        CHECK(Polynomial::parse(f.to_string(), 4, MonomialOrder{}) == f);
    }
    const MonomialOrder order{};
    CHECK(Polynomial::parse("0", 2, order).is_zero());
    CHECK(Polynomial::parse("5/2*x1^2 - 1/3", 2, order).to_string() == "5/2*x1^2 - 1/3");
    CHECK(Polynomial::parse("x2 - x1", 2, order).to_string() == "-x1 + x2");
    CHECK(Polynomial::constant(rational(-7, 2), 1, order).to_string() == "-7/2");
}

TEST_CASE("text form is sorted by the active order") {
    const Polynomial f = Polynomial::parse("x1 + x1^3 + x2^2", 2, MonomialOrder{});
    CHECK(f.to_string() == "x1^3 + x2^2 + x1");
    const Polynomial g = f.with_order(MonomialOrder::named("lex"));
    CHECK(g.to_string() == "x1^3 + x1 + x2^2");
}
