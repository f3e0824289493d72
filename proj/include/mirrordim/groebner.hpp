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

#ifndef MIRRORDIM_GROEBNER_HPP
#define MIRRORDIM_GROEBNER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mirrordim/group.hpp"
#include "mirrordim/polynomial.hpp"

namespace mirrordim {

struct Ideal {
    int nvars = 0;
    MonomialOrder order;
    std::vector<Polynomial> gens;  // nonzero, deduplicated
};

inline Ideal make_ideal(std::vector<Polynomial> gens, int nvars, MonomialOrder order) {
    Ideal I;
    I.nvars = nvars;
    I.order = order;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars) throw std::invalid_argument("make_ideal: arity mismatch");
        Polynomial h = g.order() == order ? std::move(g) : g.with_order(order);
        bool dup = false;
        for (const auto& existing : I.gens)
            if (existing == h) {
                dup = true;
                break;
            }
        if (!dup) I.gens.push_back(std::move(h));
    }
    return I;
}

struct GroebnerLimits {
    std::size_t max_basis = 10'000;
    int max_degree = 512;
    std::size_t max_standard_monomials = 2'000'000;
    std::size_t max_truncation_generators = 500'000;
};

struct GroebnerBasis {
    int nvars = 0;
    MonomialOrder order;
    std::vector<Polynomial> polys;  // reduced: monic, minimal LTs, sorted ascending by LT
};

namespace detail {

// Complete reduction: no term of the result is divisible by any basis
// leading term. The basis must be monic and sorted; the first divisor in
// basis order is used, which keeps reduction deterministic.
inline Polynomial normal_form_impl(Polynomial w, const std::vector<Polynomial>& basis,
                                   const GroebnerLimits& limits) {
    std::vector<Term> done;
    while (!w.is_zero()) {
        const Term lt = w.leading_term();
        if (lt.mono.degree() > limits.max_degree)
            throw ResourceExhausted("normal form exceeded the degree cap of " +
                                    std::to_string(limits.max_degree));
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis)
            if (divides(g.leading_term().mono, lt.mono)) {
                reducer = &g;
                break;
            }
        if (reducer) {
            w.sub_mul_term(lt.coef / reducer->leading_term().coef,
                           quotient(lt.mono, reducer->leading_term().mono), *reducer);
        } else {
            done.push_back(lt);
            w -= Polynomial::monomial(lt.mono, lt.coef, w.order());
        }
    }
    return Polynomial::from_terms(std::move(done), basis.empty() ? w.nvars() : basis[0].nvars(),
                                  w.order());
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    const Monomial l = lcm(f.leading_term().mono, g.leading_term().mono);
    Polynomial a = Polynomial::monomial(quotient(l, f.leading_term().mono),
                                        Rational(1) / f.leading_term().coef, f.order()) *
                   f;
    Polynomial b = Polynomial::monomial(quotient(l, g.leading_term().mono),
                                        Rational(1) / g.leading_term().coef, g.order()) *
                   g;
    return a - b;
}

// Buchberger with Gebauer-Moeller pair elimination and normal pair
// selection (smallest lcm first). Desk-scale inputs; no modular tricks.
class Buchberger {
   public:
    Buchberger(int nvars, MonomialOrder order, GroebnerLimits limits)
        : nvars_(nvars), order_(std::move(order)), limits_(limits) {}

    void add_generators(const std::vector<Polynomial>& gens) {
        // Interreduce the inputs first: replaces each generator by its
        // normal form against the already-accepted ones.
        std::vector<Polynomial> pending = gens;
        std::sort(pending.begin(), pending.end(), [this](const Polynomial& a, const Polynomial& b) {
            return order_.less(a.leading_term().mono, b.leading_term().mono);
        });
        for (const auto& g : pending) {
            Polynomial h = normal_form_impl(g, basis_, limits_);
            if (!h.is_zero()) install(h.monic());
        }
    }

    void run() {
        while (!pairs_.empty()) {
            const std::size_t best = select_pair();
            const Pair p = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            Polynomial h = normal_form_impl(spoly(basis_[p.i], basis_[p.j]), basis_, limits_);
            if (!h.is_zero()) install(h.monic());
        }
    }

    // Minimal + tail-reduced + monic + sorted ascending by leading term.
    std::vector<Polynomial> reduced() const {
        std::vector<Polynomial> sorted = basis_;
        std::sort(sorted.begin(), sorted.end(), [this](const Polynomial& a, const Polynomial& b) {
            return order_.less(a.leading_term().mono, b.leading_term().mono);
        });
        std::vector<Polynomial> minimal;
        for (const auto& g : sorted) {
            bool redundant = false;
            for (const auto& kept : minimal)
                if (divides(kept.leading_term().mono, g.leading_term().mono)) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(g);
        }
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            out.push_back(normal_form_impl(minimal[i], others, limits_).monic());
        }
        std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
            return order_.less(a.leading_term().mono, b.leading_term().mono);
        });
        return out;
    }

   private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    int nvars_;
    MonomialOrder order_;
    GroebnerLimits limits_;
    std::vector<Polynomial> basis_;
    std::vector<Pair> pairs_;

    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
            if (c < 0 || (c == 0 && std::pair(pairs_[k].i, pairs_[k].j) <
                                        std::pair(pairs_[best].i, pairs_[best].j)))
                best = k;
        }
        return best;
    }

    // Gebauer-Moeller update on appending one monic element.
    void install(Polynomial h) {
        if (basis_.size() + 1 > limits_.max_basis)
            throw ResourceExhausted("groebner basis size cap of " +
                                    std::to_string(limits_.max_basis) + " exceeded");
        const std::size_t t = basis_.size();
        const Monomial lt_t = h.leading_term().mono;

        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::size_t i = 0; i < t; ++i) {
            const Monomial& lt_i = basis_[i].leading_term().mono;
            cands.push_back({i, lcm(lt_i, lt_t), coprime(lt_i, lt_t)});
        }

        // Criterion M: keep only lcm-minimal candidates.
        std::vector<Cand> stage1;
        for (const auto& c : cands) {
            bool dominated = false;
            for (const auto& d : cands) {
                if (d.i == c.i) continue;
                if (d.lcm != c.lcm && divides(d.lcm, c.lcm)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) stage1.push_back(c);
        }
        // Criterion F: one representative per lcm value, preferring a
        // coprime pair so that criterion B can discard the whole class.
        std::map<Monomial, Cand> by_lcm;
        for (const auto& c : stage1) {
            auto it = by_lcm.find(c.lcm);
            if (it == by_lcm.end())
                by_lcm.emplace(c.lcm, c);
            else if (c.coprime && !it->second.coprime)
                it->second = c;
        }
        // Criterion B: coprime leading terms have S-polynomials that
        // reduce to zero.
        std::vector<Pair> fresh;
        for (const auto& [l, c] : by_lcm)
            if (!c.coprime) fresh.push_back({c.i, t, l});

        // Prune old pairs made redundant by the new leading term.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            const bool covered = divides(lt_t, p.lcm) &&
                                 lcm(basis_[p.i].leading_term().mono, lt_t) != p.lcm &&
                                 lcm(basis_[p.j].leading_term().mono, lt_t) != p.lcm;
            if (!covered) kept.push_back(p);
        }
        pairs_ = std::move(kept);
        pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
        basis_.push_back(std::move(h));
    }
};

}  // namespace detail

// Reduced Groebner basis; unique for a fixed ideal and order, hence
// deterministic output.
inline GroebnerBasis groebner(const Ideal& I, const GroebnerLimits& limits = {}) {
    detail::Buchberger engine(I.nvars, I.order, limits);
    engine.add_generators(I.gens);
    engine.run();
    GroebnerBasis gb;
    gb.nvars = I.nvars;
    gb.order = I.order;
    gb.polys = engine.reduced();
    return gb;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                              const GroebnerLimits& limits = {}) {
    if (f.nvars() != gb.nvars) throw std::invalid_argument("normal_form: arity mismatch");
    const Polynomial w = f.order() == gb.order ? f : f.with_order(gb.order);
    return detail::normal_form_impl(w, gb.polys, limits);
}

// Post-hoc Buchberger criterion: every S-polynomial of the basis reduces
// to zero. Used by the test suites as an independent certificate.
inline bool buchberger_criterion_holds(const GroebnerBasis& gb,
                                       const GroebnerLimits& limits = {}) {
    for (std::size_t i = 0; i < gb.polys.size(); ++i)
        for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
            if (coprime(gb.polys[i].leading_term().mono, gb.polys[j].leading_term().mono))
                continue;
            Polynomial r = detail::normal_form_impl(detail::spoly(gb.polys[i], gb.polys[j]),
                                                    gb.polys, limits);
            if (!r.is_zero()) return false;
        }
    return true;
}

enum class Locality { global, local };

// Grading hook: classes are computed in the full variable count of the
// ambient group even when the ideal lives on a coordinate subset.
struct GradingContext {
    int a = 0;
    int full_vars = 0;
    std::vector<int> var_map;  // sector variable -> 0-based global coordinate

    static GradingContext identity(int nvars, int a) {
        GradingContext g;
        g.a = a;
        g.full_vars = nvars;
        g.var_map.resize(nvars);
        for (int i = 0; i < nvars; ++i) g.var_map[i] = i;
        return g;
    }

    CharacterClass class_of(const Monomial& m) const {
        return monomial_class_embedded(m, var_map, full_vars, a);
    }
};

struct QuotientBasis {
    Locality locality = Locality::global;
    int truncation = 0;                                // stabilized N for local results
    std::vector<std::pair<int, std::size_t>> trace;    // (N, dim) stabilization history
    std::vector<Monomial> monomials;                   // ascending under gb.order
    std::map<CharacterClass, int> graded_dims;         // filled when a grading is supplied
    GroebnerBasis gb;

    std::size_t dim() const { return monomials.size(); }

    int graded_dim(const CharacterClass& c) const {
        auto it = graded_dims.find(c);
        return it == graded_dims.end() ? 0 : it->second;
    }
};

namespace detail {

inline void enumerate_standard(const std::vector<Monomial>& lts, std::vector<int>& bounds,
                               std::vector<int>& current, int var, std::vector<Monomial>& out,
                               std::size_t cap) {
    if (var == static_cast<int>(bounds.size())) {
        Monomial m{std::vector<int>(current)};
        for (const auto& lt : lts)
            if (divides(lt, m)) return;
        if (out.size() >= cap)
            throw ResourceExhausted("standard monomial cap of " + std::to_string(cap) +
                                    " exceeded");
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e < bounds[var]; ++e) {
        current[var] = e;
        enumerate_standard(lts, bounds, current, var + 1, out, cap);
    }
    current[var] = 0;
}

inline QuotientBasis quotient_from_gb(GroebnerBasis gb, const GroebnerLimits& limits,
                                      const GradingContext* grading) {
    QuotientBasis qb;
    qb.gb = std::move(gb);
    const int nv = qb.gb.nvars;
    if (nv > 0) {
        std::vector<int> bounds(nv, -1);
        std::vector<Monomial> lts;
        for (const auto& g : qb.gb.polys) lts.push_back(g.leading_term().mono);
        for (const auto& lt : lts) {
            int support = -1;
            bool pure = true;
            for (int i = 0; i < nv; ++i)
                if (lt.exps[i] > 0) {
                    if (support >= 0) {
                        pure = false;
                        break;
                    }
                    support = i;
                }
            if (pure && support >= 0)
                bounds[support] = bounds[support] < 0 ? lt.exps[support]
                                                      : std::min(bounds[support], lt.exps[support]);
        }
        for (int i = 0; i < nv; ++i)
            if (bounds[i] < 0)
                throw NotZeroDimensional("not zero-dimensional: no pure power of x" +
                                         std::to_string(i + 1) + " among the leading terms");
        BigInt box(1);
        for (int b : bounds) box *= b;
        if (box > BigInt(static_cast<unsigned long>(limits.max_standard_monomials)))
            throw ResourceExhausted("standard monomial cap of " +
                                    std::to_string(limits.max_standard_monomials) + " exceeded");
        std::vector<int> current(nv, 0);
        enumerate_standard(lts, bounds, current, 0, qb.monomials, limits.max_standard_monomials);
        std::sort(qb.monomials.begin(), qb.monomials.end(),
                  [&qb](const Monomial& a, const Monomial& b) { return qb.gb.order.less(a, b); });
    } else {
        qb.monomials.push_back(Monomial::one(0));
    }
    if (grading)
        for (const auto& m : qb.monomials) ++qb.graded_dims[grading->class_of(m)];
    return qb;
}

// Normal forms of monomials against a fixed basis, memoized; confluence of
// reduction modulo a Groebner basis makes the recursion order irrelevant.
class MonomialReducer {
   public:
    MonomialReducer(const GroebnerBasis& gb, const GroebnerLimits& limits)
        : gb_(gb), limits_(limits) {}

    const Polynomial& reduce(const Monomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        if (m.degree() > limits_.max_degree)
            throw ResourceExhausted("monomial reduction exceeded the degree cap of " +
                                    std::to_string(limits_.max_degree));
        const Polynomial* reducer = nullptr;
        for (const auto& g : gb_.polys)
            if (divides(g.leading_term().mono, m)) {
                reducer = &g;
                break;
            }
        Polynomial result(gb_.nvars, gb_.order);
        if (!reducer) {
            result = Polynomial::monomial(m, Rational(1), gb_.order);
        } else {
            const Monomial q = quotient(m, reducer->leading_term().mono);
            bool first = true;
            for (const auto& t : reducer->terms()) {
                if (first) {  // leading term cancels
                    first = false;
                    continue;
                }
                result -= t.coef * reduce(mul(q, t.mono));
            }
        }
        return memo_.emplace(m, std::move(result)).first->second;
    }

   private:
    const GroebnerBasis& gb_;
    GroebnerLimits limits_;
    std::map<Monomial, Polynomial> memo_;
};

inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> current(static_cast<std::size_t>(nvars), 0);
    // lexicographic enumeration of compositions of `degree`
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            current[static_cast<std::size_t>(var)] = remaining;
            out.push_back(Monomial{std::vector<int>(current)});
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

}  // namespace detail

inline QuotientBasis quotient_basis(const Ideal& I, const GroebnerLimits& limits = {},
                                    const GradingContext* grading = nullptr) {
    return detail::quotient_from_gb(groebner(I, limits), limits, grading);
}

struct LocalOptions {
    int start = 2;
    int cap = 64;
};

// Start one past the top socle degree the potential family can reach, so
// the first truncation is usually already stable.
inline LocalOptions default_local_options(int nvars, int degree) {
    LocalOptions o;
    o.start = std::max(2, nvars * (std::max(degree, 2) - 2) + 2);
    o.cap = std::max(4 * (std::max(degree, 2) - 1), o.start + 2);
    return o;
}

// Basis of the local (power-series) quotient, computed as the stabilized
// truncation k[x]/(I + m^N): the dimension is non-decreasing in N and two
// consecutive equal values force m^N into the local ideal (Nakayama), so
// the first repeat is already exact.
inline QuotientBasis local_quotient_basis(const Ideal& I, const LocalOptions& opts = {},
                                          const GroebnerLimits& limits = {},
                                          const GradingContext* grading = nullptr) {
    const GroebnerBasis base_gb = groebner(I, limits);
    std::optional<std::size_t> prev;
    std::vector<std::pair<int, std::size_t>> trace;
    for (int N = opts.start; N <= opts.cap; ++N) {
        std::vector<Polynomial> gens = base_gb.polys;
        if (I.nvars > 0) {
            BigInt gen_count;
            mpz_bin_uiui(gen_count.get_mpz_t(), static_cast<unsigned long>(N + I.nvars - 1),
                         static_cast<unsigned long>(I.nvars - 1));
            if (gen_count > BigInt(static_cast<unsigned long>(limits.max_truncation_generators)))
                throw ResourceExhausted(
                    "truncation at degree " + std::to_string(N) + " needs " +
                    gen_count.get_str() + " generators, above the cap of " +
                    std::to_string(limits.max_truncation_generators));
            detail::MonomialReducer red(base_gb, limits);
            std::set<std::vector<int>> seen;
            for (const auto& m : detail::monomials_of_degree(I.nvars, N)) {
                Polynomial h = red.reduce(m);
                if (h.is_zero()) continue;
                h = h.monic();
                std::vector<int> key;
                for (const auto& t : h.terms()) {
                    key.insert(key.end(), t.mono.exps.begin(), t.mono.exps.end());
                    key.push_back(-1);
                }
                if (seen.insert(std::move(key)).second) gens.push_back(std::move(h));
            }
        }
        QuotientBasis qb = detail::quotient_from_gb(
            groebner(make_ideal(std::move(gens), I.nvars, I.order), limits), limits, grading);
        trace.emplace_back(N, qb.dim());
        if (prev && *prev == qb.dim()) {
            qb.locality = Locality::local;
            qb.truncation = N;
            qb.trace = std::move(trace);
            return qb;
        }
        prev = qb.dim();
    }
    throw ResourceExhausted("no stabilization below the truncation cap of " +
                            std::to_string(opts.cap));
}

// Dimension of the Milnor algebra of f: global polynomial quotient, or the
// local algebra at the origin when `local` is set.
inline std::size_t milnor_number(const Polynomial& f, bool local,
                                 const GroebnerLimits& limits = {},
                                 std::optional<LocalOptions> local_opts = std::nullopt) {
    Ideal I = make_ideal(partials(f), f.nvars(), f.order());
    if (!local) return quotient_basis(I, limits).dim();
    const LocalOptions opts =
        local_opts ? *local_opts : default_local_options(f.nvars(), f.total_degree());
    return local_quotient_basis(I, opts, limits).dim();
}

}  // namespace mirrordim

#endif
