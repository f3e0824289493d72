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

#ifndef MIRRORDIM_REPORT_HPP
#define MIRRORDIM_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "mirrordim/hochschild.hpp"
#include "mirrordim/hodge.hpp"
#include "mirrordim/koszul.hpp"
#include "mirrordim/thimbles.hpp"

namespace mirrordim {

inline constexpr int report_schema = 1;

inline json sector_to_json(const SectorReport& s) {
    json j;
    j["gamma"] = s.gamma.residues;
    j["I"] = s.fixed;
    j["dimN"] = s.dim_normal;
    j["shift"] = s.shift.str();
    j["restricted"] = s.restricted.to_string();
    j["contribution"] = s.contribution;
    j["parity"] = s.parity;
    j["honest"] = s.honest;
    if (s.honest) j["jac_dim"] = s.jac_dim;
    return j;
}

inline json hh_to_json(const HHReport& r, bool full = false) {
    json j;
    j["schema"] = report_schema;
    j["n"] = r.n;
    j["a"] = r.a;
    j["hh_even"] = big_to_json(r.hh_even);
    j["hh_odd"] = big_to_json(r.hh_odd);
    j["hh_total"] = big_to_json(r.hh_even + r.hh_odd);
    j["identity_sector_dim"] = big_to_json(r.identity_sector_dim);
    j["free_sector_count"] = big_to_json(r.free_sector_count);
    j["other_sector_total"] = big_to_json(r.other_sector_total);
    j["high_degree"] = r.high_degree;
    j["trusted"] = r.trusted;
    j["convention"] = r.convention;
    if (!r.sectors_elided && (full || !r.sectors.empty())) {
        json sectors = json::array();
        for (const auto& s : r.sectors) sectors.push_back(sector_to_json(s));
        j["sectors"] = sectors;
    } else {
        j["sectors_elided"] = true;
    }
    return j;
}

inline json hodge_to_json(const HodgeReport& r) {
    json j;
    j["schema"] = report_schema;
    j["n"] = r.n;
    j["a"] = r.a;
    json prim = json::array();
    for (const auto& h : r.prim) prim.push_back(big_to_json(h));
    j["prim"] = prim;
    j["qh_dim"] = big_to_json(r.qh_dim);
    j["even"] = big_to_json(r.total_even);
    j["odd"] = big_to_json(r.total_odd);
    j["high_degree"] = r.high_degree;
    return j;
}

inline json bounds_to_json(const BoundsReport& r) {
    json j;
    j["schema"] = report_schema;
    j["n"] = r.n;
    j["a"] = r.a;
    json items = json::array();
    for (const auto& item : r.items)
        items.push_back({{"name", item.name}, {"detail", item.detail}, {"pass", item.pass}});
    j["items"] = items;
    j["all_pass"] = r.all_pass;
    return j;
}

inline json graph_to_json(const GraphSummary& g, int n, int a) {
    json j;
    j["schema"] = report_schema;
    j["n"] = n;
    j["a"] = a;
    j["vertices"] = g.vertices;
    j["edges"] = g.edges;
    j["components"] = g.components;
    j["connected"] = g.components == 1;
    return j;
}

inline json hom_to_json(const HomDescriptor& d, const ThimbleIndex& i, const ThimbleIndex& j) {
    json out;
    out["schema"] = report_schema;
    out["i"] = i.entries;
    out["j"] = j.entries;
    out["case"] = HomDescriptor::case_name(d.kind);
    out["rank"] = d.rank;
    json gens = json::array();
    for (const auto& word : d.generators)
        gens.push_back({{"word", word},
                        {"text", generator_word_string(word)},
                        {"length", word.size()},
                        {"parity", word.size() % 2}});
    out["generators"] = gens;
    out["module"] = "free k[s^{+-a}]-module";
    return out;
}

inline json bijection_to_json(const BijectionWitness& w) {
    json j;
    j["p"] = w.p;
    j["count_i"] = big_to_json(w.count_i);
    j["count_j"] = big_to_json(w.count_j);
    j["equal"] = w.equal;
    return j;
}

inline json mf_report_to_json(const MFReport& r) {
    json j;
    j["schema"] = report_schema;
    j["pq_identity"] = r.pq_ok;
    j["qp_identity"] = r.qp_ok;
    j["homogeneous"] = r.homogeneous;
    j["pass"] = r.pass();
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    return j;
}

inline json mf_to_json(const MatrixFactorization& mf, bool full = false) {
    json j;
    j["schema"] = report_schema;
    j["nvars"] = mf.nvars;
    j["half_rank"] = mf.half_rank();
    j["total_rank"] = 2 * mf.half_rank();
    if (full) {
        auto words = [&](const std::vector<std::uint32_t>& list) {
            json arr = json::array();
            for (auto w : list) arr.push_back(word_string(w, mf.nvars));
            return arr;
        };
        j["even_basis"] = words(mf.even_words);
        j["odd_basis"] = words(mf.odd_words);
        auto block = [&](const std::vector<std::vector<Polynomial>>& B) {
            json rows = json::array();
            for (const auto& row : B) {
                json r = json::array();
                for (const auto& e : row) r.push_back(e.to_string());
                rows.push_back(r);
            }
            return rows;
        };
        j["P"] = block(mf.P);
        j["Q"] = block(mf.Q);
        json we = json::array(), wo = json::array();
        for (const auto& w : mf.weights_even) we.push_back(w.str());
        for (const auto& w : mf.weights_odd) wo.push_back(w.str());
        j["weights_even"] = we;
        j["weights_odd"] = wo;
    }
    return j;
}

// The headline check: both sides of the dimension identity, the index
// bijection for every p, and the degree bounds.
struct VerificationReport {
    int n = 0, a = 0;
    HHReport hh;
    HodgeReport hodge;
    bool equal_total = false;
    bool equal_parity = false;
    BoundsReport bounds;
    std::vector<BijectionWitness> bijections;
    bool all_pass = false;
};

inline VerificationReport build_verification(int n, int a, const HochschildOptions& opts = {}) {
    VerificationReport rep;
    rep.n = n;
    rep.a = a;
    rep.hh = hochschild_dimensions(n, a, opts);
    rep.hodge = qh_dimension(n, a);
    rep.equal_total = rep.hh.hh_even + rep.hh.hh_odd == rep.hodge.qh_dim;
    rep.equal_parity =
        rep.hh.hh_even == rep.hodge.total_even && rep.hh.hh_odd == rep.hodge.total_odd;
    rep.bounds = check_degree_bounds(n, a);
    bool bijections_ok = true;
    for (int p = 0; p <= n; ++p) {
        rep.bijections.push_back(index_bijection_check(n, a, p));
        bijections_ok = bijections_ok && rep.bijections.back().equal;
    }
    rep.all_pass = rep.equal_total && rep.equal_parity && rep.bounds.all_pass && bijections_ok;
    return rep;
}

inline json verification_to_json(const VerificationReport& r, bool full = false) {
    json j;
    j["schema"] = report_schema;
    j["n"] = r.n;
    j["a"] = r.a;
    j["hh"] = hh_to_json(r.hh, full);
    j["hodge"] = hodge_to_json(r.hodge);
    j["equal_total"] = r.equal_total;
    j["equal_parity"] = r.equal_parity;
    j["bounds"] = bounds_to_json(r.bounds);
    json bij = json::array();
    for (const auto& w : r.bijections) bij.push_back(bijection_to_json(w));
    j["bijection"] = bij;
    j["all_pass"] = r.all_pass;
    return j;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

inline std::string bounds_table(const BoundsReport& r) {
    std::ostringstream out;
    out << "degree bounds  n=" << r.n << "  a=" << r.a << "\n";
    for (const auto& item : r.items)
        out << "  " << pass_fail(item.pass) << "  " << item.name << "  (" << item.detail << ")\n";
    out << "  all: " << pass_fail(r.all_pass) << "\n";
    return out.str();
}

inline std::string hh_table(const HHReport& r) {
    std::ostringstream out;
    out << "Hochschild dimensions  n=" << r.n << "  a=" << r.a
        << (r.trusted ? "  [sector criterion trusted]" : "  [sectors computed honestly]") << "\n";
    out << "  hh_even " << r.hh_even.get_str() << "   hh_odd " << r.hh_odd.get_str()
        << "   total " << BigInt(r.hh_even + r.hh_odd).get_str() << "\n";
    out << "  identity sector " << r.identity_sector_dim.get_str() << " + free sectors "
        << r.free_sector_count.get_str() << " + other sectors "
        << r.other_sector_total.get_str() << "\n";
    out << "  high degree bound a > 2n+1: " << yes_no(r.high_degree) << "\n";
    return out.str();
}

inline std::string hodge_table(const HodgeReport& r) {
    std::ostringstream out;
    out << "quantum cohomology dimensions  n=" << r.n << "  a=" << r.a << "\n  prim [";
    for (std::size_t p = 0; p < r.prim.size(); ++p)
        out << (p ? ", " : "") << r.prim[p].get_str();
    out << "]\n  qh_dim " << r.qh_dim.get_str() << "   even " << r.total_even.get_str()
        << "   odd " << r.total_odd.get_str() << "\n";
    return out.str();
}

inline std::string verification_table(const VerificationReport& r) {
    std::ostringstream out;
    out << "mirror dimension check  n=" << r.n << "  a=" << r.a << "\n";
    out << "  dim HH*  even " << r.hh.hh_even.get_str() << "  odd " << r.hh.hh_odd.get_str()
        << "  total " << BigInt(r.hh.hh_even + r.hh.hh_odd).get_str()
        << (r.hh.trusted ? "  [trusted sectors]" : "  [honest sectors]") << "\n";
    out << "  dim QH*  even " << r.hodge.total_even.get_str() << "  odd "
        << r.hodge.total_odd.get_str() << "  total " << r.hodge.qh_dim.get_str() << "\n";
    out << "  equal total:  " << yes_no(r.equal_total) << "\n";
    out << "  equal parity: " << yes_no(r.equal_parity) << "\n";
    for (const auto& item : r.bounds.items)
        out << "  bound " << item.name << ": " << pass_fail(item.pass) << "\n";
    for (const auto& w : r.bijections)
        out << "  bijection p=" << w.p << ": " << w.count_i.get_str() << " = "
            << w.count_j.get_str() << " " << (w.equal ? "ok" : "MISMATCH") << "\n";
    out << "  RESULT: " << (r.all_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace mirrordim

#endif
