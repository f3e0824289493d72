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

#ifndef MIRRORDIM_SERIALIZE_HPP
#define MIRRORDIM_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mirrordim/groebner.hpp"

namespace mirrordim {

using json = nlohmann::json;

// Counts can outgrow int64 at extreme parameters; those are emitted as
// decimal strings so nothing is ever rounded.
inline json big_to_json(const BigInt& z) {
    if (fits_int64(z)) return to_int64(z);
    return z.get_str();
}

inline json monomial_to_json(const Monomial& m) { return json(m.exps); }

inline Monomial monomial_from_json(const json& j) {
    return Monomial(j.get<std::vector<int>>());
}

inline json polynomial_to_json(const Polynomial& p) { return p.to_string(); }

inline json quotient_basis_to_json(const QuotientBasis& qb) {
    json j;
    j["schema"] = 1;
    j["locality"] = qb.locality == Locality::local ? "local" : "global";
    j["truncation"] = qb.truncation;
    json trace = json::array();
    for (const auto& [N, d] : qb.trace) trace.push_back({{"N", N}, {"dim", d}});
    j["trace"] = trace;
    j["dim"] = qb.dim();
    json monos = json::array();
    for (const auto& m : qb.monomials) monos.push_back(monomial_to_json(m));
    j["monomials"] = monos;
    json graded = json::object();
    for (const auto& [cls, d] : qb.graded_dims) graded[cls.str()] = d;
    j["graded_dims"] = graded;
    j["graded_modulus"] = qb.graded_dims.empty() ? 0 : qb.graded_dims.begin()->first.modulus;
    j["order"] = qb.gb.order.name();
    j["nvars"] = qb.gb.nvars;
    json basis = json::array();
    for (const auto& g : qb.gb.polys) basis.push_back(g.to_string());
    j["groebner_basis"] = basis;
    return j;
}

inline QuotientBasis quotient_basis_from_json(const json& j) {
    QuotientBasis qb;
    qb.locality = j.at("locality") == "local" ? Locality::local : Locality::global;
    qb.truncation = j.at("truncation").get<int>();
    for (const auto& e : j.at("trace"))
        qb.trace.emplace_back(e.at("N").get<int>(), e.at("dim").get<std::size_t>());
    qb.gb.nvars = j.at("nvars").get<int>();
    qb.gb.order = MonomialOrder::named(j.at("order").get<std::string>());
    for (const auto& m : j.at("monomials")) qb.monomials.push_back(monomial_from_json(m));
    const int modulus = j.at("graded_modulus").get<int>();
    for (const auto& [key, val] : j.at("graded_dims").items()) {
        CharacterClass c;
        c.modulus = modulus;
        std::size_t pos = 0;
        while (pos < key.size()) {
            std::size_t next = key.find(',', pos);
            if (next == std::string::npos) next = key.size();
            c.rep.push_back(std::stoi(key.substr(pos, next - pos)));
            pos = next + 1;
        }
        qb.graded_dims[c] = val.get<int>();
    }
    for (const auto& g : j.at("groebner_basis"))
        qb.gb.polys.push_back(
            Polynomial::parse(g.get<std::string>(), qb.gb.nvars, qb.gb.order));
    return qb;
}

inline std::string sector_cache_key(int n, int a, const std::vector<int>& residues,
                                    const MonomialOrder& order, const std::string& locality,
                                    int trunc_start = 0, int trunc_cap = 0) {
    std::string key = "qb_v1_n" + std::to_string(n) + "_a" + std::to_string(a) + "_g";
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i) key += '-';
        key += std::to_string(residues[i]);
    }
    key += "_" + order.name() + "_" + locality;
    if (trunc_start > 0)
        key += "_t" + std::to_string(trunc_start) + "-" + std::to_string(trunc_cap);
    return key;
}

}  // namespace mirrordim

#endif
