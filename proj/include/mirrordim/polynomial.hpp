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

#ifndef MIRRORDIM_POLYNOMIAL_HPP
#define MIRRORDIM_POLYNOMIAL_HPP

#include <cctype>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mirrordim/monomial.hpp"
#include "mirrordim/rational.hpp"

namespace mirrordim {

struct Term {
    Monomial mono;
    Rational coef;
};

// Immutable-by-convention exact polynomial: terms kept sorted descending
// under the attached order, no zero coefficients stored.
class Polynomial {
   public:
    Polynomial() : nvars_(0) {}
    Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(std::move(order)) {}

    static Polynomial zero(int nvars, MonomialOrder order) {
        return Polynomial(nvars, std::move(order));
    }

    static Polynomial constant(const Rational& c, int nvars, MonomialOrder order) {
        Polynomial p(nvars, std::move(order));
        if (c != 0) p.terms_.push_back({Monomial::one(nvars), c});
        return p;
    }

    static Polynomial monomial(Monomial m, const Rational& c, MonomialOrder order) {
        Polynomial p(m.nvars(), std::move(order));
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }

    static Polynomial variable(int i, int nvars, MonomialOrder order) {
        return monomial(Monomial::var(i, nvars), Rational(1), std::move(order));
    }

    // Builds from an arbitrary term list (merges duplicates, drops zeros).
    static Polynomial from_terms(std::vector<Term> terms, int nvars, MonomialOrder order) {
        std::map<Monomial, Rational> acc;
        for (auto& t : terms) {
            if (t.mono.nvars() != nvars)
                throw std::invalid_argument("Polynomial: term arity mismatch");
            acc[t.mono] += t.coef;
        }
        Polynomial p(nvars, std::move(order));
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, c});
        p.sort_terms();
        return p;
    }

    int nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    const Term& leading_term() const {
        if (terms_.empty()) throw Error("leading_term of zero polynomial");
        return terms_.front();
    }

    // -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Rational coeff(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coef;
        return Rational(0);
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return a.merged(b, Rational(1));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a.merged(b, Rational(-1));
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        std::map<Monomial, Rational> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc[mul(ta.mono, tb.mono)] += ta.coef * tb.coef;
        Polynomial p(a.nvars_, a.order_);
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, c});
        p.sort_terms();
        return p;
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        Polynomial r = a;
        if (c == 0) {
            r.terms_.clear();
            return r;
        }
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& c) { return c * a; }
    Polynomial& operator*=(const Rational& c) { return *this = c * *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        // Orders may differ; compare as term sets via the sorted-descending
        // representation of each, which is order-dependent, so normalize.
        if (a.order_ == b.order_) {
            for (std::size_t i = 0; i < a.terms_.size(); ++i)
                if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
                    return false;
            return true;
        }
        return a.with_order(b.order_) == b;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // *this -= c * x^m * g; the workhorse of polynomial reduction.
    void sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) {
        check_compatible(g);
        std::vector<Term> shifted;
        shifted.reserve(g.terms_.size());
        for (const auto& t : g.terms_) shifted.push_back({mul(t.mono, m), -c * t.coef});
        merge_in_place(std::move(shifted));
    }

    Polynomial derivative(int var) const {
        Polynomial r(nvars_, order_);
        for (const auto& t : terms_) {
            const int e = t.mono.exps[var];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.exps[var] = e - 1;
            r.terms_.push_back({std::move(m), t.coef * e});
        }
        r.sort_terms();
        return r;
    }

    Rational eval(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("eval: wrong point arity");
        Rational total(0);
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < t.mono.exps[i]; ++k) v *= point[i];
            total += v;
        }
        return total;
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(Rational(1), nvars_, order_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / leading_term().coef) * *this;
    }

    Polynomial with_order(MonomialOrder o) const {
        Polynomial r = *this;
        r.order_ = std::move(o);
        r.sort_terms();
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            const bool neg = t.coef < 0;
            Rational mag = neg ? Rational(-t.coef) : t.coef;
            if (i == 0)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (t.mono.is_one())
                s += mirrordim::to_string(mag);
            else {
                if (mag != 1) {
                    s += mirrordim::to_string(mag);
                    s += '*';
                }
                s += mirrordim::to_string(t.mono);
            }
        }
        return s;
    }

    static Polynomial parse(const std::string& text, int nvars, MonomialOrder order);

   private:
    int nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;

    void check_compatible(const Polynomial& b) const {
        if (nvars_ != b.nvars_)
            throw std::invalid_argument("Polynomial: mixed variable counts");
        if (order_ != b.order_) throw std::invalid_argument("Polynomial: mixed orders");
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [this](const Term& a, const Term& b) { return order_.less(b.mono, a.mono); });
    }

    Polynomial merged(const Polynomial& b, const Rational& scale) const {
        check_compatible(b);
        Polynomial r(nvars_, order_);
        r.terms_.reserve(terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < b.terms_.size()) {
            const int c = order_.compare(terms_[i].mono, b.terms_[j].mono);
            if (c > 0)
                r.terms_.push_back(terms_[i++]);
            else if (c < 0)
                r.terms_.push_back({b.terms_[j].mono, scale * b.terms_[j].coef}), ++j;
            else {
                Rational sum = terms_[i].coef + scale * b.terms_[j].coef;
                if (sum != 0) r.terms_.push_back({terms_[i].mono, std::move(sum)});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < b.terms_.size(); ++j)
            r.terms_.push_back({b.terms_[j].mono, scale * b.terms_[j].coef});
        return r;
    }

    // Adds an already order-compatible term list (sorted after shift is not
    // guaranteed, so sort first, then merge).
    void merge_in_place(std::vector<Term> other) {
        std::sort(other.begin(), other.end(),
                  [this](const Term& a, const Term& b) { return order_.less(b.mono, a.mono); });
        Polynomial tmp(nvars_, order_);
        tmp.terms_ = std::move(other);
        *this = merged(tmp, Rational(1));
    }
};

// w = x_1^a + ... + x_{n+2}^a on n+2 variables.
inline Polynomial fermat_potential(int n, int a,
                                   MonomialOrder order = MonomialOrder{}) {
    if (n < 2) throw std::invalid_argument("fermat_potential: n must be >= 2");
    if (a < 3) throw std::invalid_argument("fermat_potential: a must be >= 3");
    const int m = n + 2;
    std::vector<Term> terms;
    for (int i = 0; i < m; ++i) terms.push_back({Monomial::var(i, m, a), Rational(1)});
    return Polynomial::from_terms(std::move(terms), m, std::move(order));
}

// w - x_1 ... x_{n+2}.
inline Polynomial deformed_potential(int n, int a,
                                     MonomialOrder order = MonomialOrder{}) {
    Polynomial w = fermat_potential(n, a, order);
    const int m = n + 2;
    return w - Polynomial::monomial(Monomial(std::vector<int>(m, 1)), Rational(1),
                                    std::move(order));
}

inline std::vector<Polynomial> partials(const Polynomial& f) {
    std::vector<Polynomial> out;
    out.reserve(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
    return out;
}

namespace detail {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;
    int nvars;

    explicit PolyParser(const std::string& str, int nv) : s(str), nvars(nv) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("polynomial parse: digit expected at " +
                                                      std::to_string(start));
        return s.substr(start, pos - start);
    }

    Term read_term() {
        Term t{Monomial::one(nvars), Rational(1)};
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = read_integer();
            std::string lit = num;
            if (peek() == '/') {
                ++pos;
                lit += '/' + read_integer();
            }
            t.coef = parse_rational(lit);
            saw_factor = true;
            if (peek() == '*')
                ++pos;
            else
                return t;
        }
        while (true) {
            if (peek() != 'x') break;
            ++pos;
            int idx = std::stoi(read_integer());
            if (idx < 1 || idx > nvars)
                throw std::invalid_argument("polynomial parse: variable x" +
                                            std::to_string(idx) + " out of range");
            int e = 1;
            if (peek() == '^') {
                ++pos;
                e = std::stoi(read_integer());
            }
            t.mono.exps[idx - 1] += e;
            saw_factor = true;
            if (peek() == '*')
                ++pos;
            else
                break;
        }
        if (!saw_factor) throw std::invalid_argument("polynomial parse: empty term");
        return t;
    }
};

}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text, int nvars, MonomialOrder order) {
    detail::PolyParser p(text, nvars);
    std::vector<Term> terms;
    if (p.eof()) throw std::invalid_argument("polynomial parse: empty input");
    if (p.peek() == '0') {
        std::size_t save = p.pos;
        ++p.pos;
        if (p.eof()) return Polynomial::zero(nvars, std::move(order));
        p.pos = save;
    }
    Rational sign(1);
    if (p.peek() == '-') {
        ++p.pos;
        sign = -1;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        Term t = p.read_term();
        t.coef *= sign;
        terms.push_back(std::move(t));
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+')
            sign = 1;
        else if (c == '-')
            sign = -1;
        else
            throw std::invalid_argument("polynomial parse: expected '+' or '-' at " +
                                        std::to_string(p.pos));
        ++p.pos;
    }
    return Polynomial::from_terms(std::move(terms), nvars, std::move(order));
}

}  // namespace mirrordim

#endif
