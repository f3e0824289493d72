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

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mirrordim/mirrordim.hpp"

namespace {

using namespace mirrordim;

// Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
// 3 resource cap exceeded.
constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resources = 3;

struct CommonOpts {
    int n = 2;
    int a = 6;
    bool json = false;
    bool full = false;
    bool trust = false;
    bool no_cache = false;
    std::string order = "degrevlex";
    std::string cache_dir;
};

void add_params(CLI::App* cmd, CommonOpts& o, bool wants_order = true) {
    cmd->add_option("-n", o.n, "dimension parameter (hypersurface in P^{n+1})")->required();
    cmd->add_option("-a", o.a, "degree of the potential / hypersurface")->required();
    cmd->add_flag("--json", o.json, "emit a JSON report instead of a table");
    if (wants_order)
        cmd->add_option("--order", o.order, "monomial order: degrevlex, deglex or lex")
            ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));
}

void add_sector_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--full", o.full, "include the full per-sector list in reports");
    cmd->add_flag("--trust-sector-criterion", o.trust,
                  "fast path: use the sector vanishing criterion instead of computing "
                  "every Jacobian quotient (valid for a > 2n+1)");
    cmd->add_option("--cache-dir", o.cache_dir, "directory for the result cache")
        ->envname("MIRRORDIM_CACHE_DIR");
    cmd->add_flag("--no-cache", o.no_cache, "disable the result cache");
}

Cache resolve_cache(const CommonOpts& o) {
    if (o.no_cache) return Cache::disabled();
    if (!o.cache_dir.empty()) return Cache::at(o.cache_dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return Cache::at(std::filesystem::path(xdg) / "mirrordim");
    if (const char* home = std::getenv("HOME"); home && *home)
        return Cache::at(std::filesystem::path(home) / ".cache" / "mirrordim");
    return Cache::disabled();
}

HochschildOptions hochschild_opts(const CommonOpts& o, const Cache& cache) {
    HochschildOptions opts;
    opts.trust_sector_criterion = o.trust;
    opts.order = MonomialOrder::named(o.order);
    opts.sector_list_cap = o.full ? std::size_t(-1) : std::size_t(256);
    opts.cache = &cache;
    return opts;
}

void emit(const json& j, const std::string& table, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string piece = text.substr(pos, next - pos);
        if (piece.empty()) throw std::invalid_argument("empty entry in index list");
        out.push_back(std::stoi(piece));
        pos = next + 1;
    }
    return out;
}

int run_verify(const CommonOpts& o) {
    const Cache cache = resolve_cache(o);
    const VerificationReport rep = build_verification(o.n, o.a, hochschild_opts(o, cache));
    emit(verification_to_json(rep, o.full), verification_table(rep), o.json);
    return rep.all_pass ? exit_ok : exit_check_failed;
}

int run_hh(const CommonOpts& o) {
    const Cache cache = resolve_cache(o);
    const HHReport rep = hochschild_dimensions(o.n, o.a, hochschild_opts(o, cache));
    emit(hh_to_json(rep, o.full), hh_table(rep), o.json);
    return exit_ok;
}

int run_hodge(const CommonOpts& o) {
    const HodgeReport rep = qh_dimension(o.n, o.a);
    emit(hodge_to_json(rep), hodge_table(rep), o.json);
    return exit_ok;
}

int run_bounds(const CommonOpts& o) {
    const BoundsReport rep = check_degree_bounds(o.n, o.a);
    emit(bounds_to_json(rep), bounds_table(rep), o.json);
    return rep.all_pass ? exit_ok : exit_check_failed;
}

int run_graph(const CommonOpts& o, unsigned long long cap) {
    const GraphSummary g = hom_graph(o.n, o.a, cap);
    std::ostringstream table;
    table << "hom graph  n=" << o.n << "  a=" << o.a << "\n  vertices " << g.vertices
          << "  edges " << g.edges << "  components " << g.components << "\n";
    emit(graph_to_json(g, o.n, o.a), table.str(), o.json);
    return exit_ok;
}

int run_homs(const CommonOpts& o, const std::string& i_text, const std::string& j_text) {
    ThimbleIndex i{parse_index_list(i_text)};
    ThimbleIndex j{parse_index_list(j_text)};
    const HomDescriptor d = hom_descriptor(i, j, o.n, o.a);
    std::ostringstream table;
    table << "hom(" << i_text << " -> " << j_text << ")  case " << HomDescriptor::case_name(d.kind)
          << "  rank " << d.rank << " over k[s^{+-a}]\n";
    for (const auto& word : d.generators)
        table << "  generator " << generator_word_string(word) << "  (length " << word.size()
              << ", parity " << word.size() % 2 << ")\n";
    emit(hom_to_json(d, i, j), table.str(), o.json);
    return exit_ok;
}

int run_koszul(const CommonOpts& o) {
    const MonomialOrder order = MonomialOrder::named(o.order);
    const MatrixFactorization mf = koszul_mf(o.n, o.a, order);
    const MFReport rep = verify_mf(mf, deformed_potential(o.n, o.a, order));
    json j = mf_to_json(mf, o.full);
    j["verify"] = mf_report_to_json(rep);
    std::ostringstream table;
    table << "koszul matrix factorization  n=" << o.n << "  a=" << o.a << "\n  rank "
          << 2 * mf.half_rank() << " (" << mf.half_rank() << " + " << mf.half_rank() << ")\n"
          << "  P*Q = w*Id: " << pass_fail(rep.pq_ok) << "\n  Q*P = w*Id: "
          << pass_fail(rep.qp_ok) << "\n  entries homogeneous: " << pass_fail(rep.homogeneous)
          << "\n";
    if (!rep.first_failure.empty()) table << "  first failure: " << rep.first_failure << "\n";
    emit(j, table.str(), o.json);
    return rep.pass() ? exit_ok : exit_check_failed;
}

int run_milnor(const CommonOpts& o, bool local, const std::string& which) {
    const MonomialOrder order = MonomialOrder::named(o.order);
    const Polynomial f = which == "fermat" ? fermat_potential(o.n, o.a, order)
                                           : deformed_potential(o.n, o.a, order);
    const std::size_t mu = milnor_number(f, local);
    json j;
    j["schema"] = report_schema;
    j["n"] = o.n;
    j["a"] = o.a;
    j["potential"] = which;
    j["local"] = local;
    j["order"] = order.name();
    j["milnor_number"] = mu;
    std::ostringstream table;
    table << (local ? "local " : "global ") << "milnor number of the " << which
          << " potential  n=" << o.n << "  a=" << o.a << ": " << mu << "\n";
    emit(j, table.str(), o.json);
    return exit_ok;
}

int run_sweep(int n_min, int n_max, int a_min, int a_max, bool as_json, double budget_seconds) {
    const auto start = std::chrono::steady_clock::now();
    json rows = json::array();
    if (!as_json)
        std::cout << "n,a,hh_even,hh_odd,qh_dim,qh_even,qh_odd,equal_total,equal_parity,"
                     "high_degree\n";
    bool out_of_budget = false;
    for (int n = n_min; n <= n_max && !out_of_budget; ++n)
        for (int a = a_min; a <= a_max; ++a) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (elapsed > budget_seconds) {
                std::cerr << "sweep: budget of " << budget_seconds
                          << "s exhausted before n=" << n << " a=" << a
                          << "; emitting partial results\n";
                out_of_budget = true;
                break;
            }
            HochschildOptions opts;
            opts.trust_sector_criterion = true;  // sweeps use the fast path
            opts.sector_list_cap = 0;
            const HHReport hh = hochschild_dimensions(n, a, opts);
            const HodgeReport qh = qh_dimension(n, a);
            const bool equal_total = hh.hh_even + hh.hh_odd == qh.qh_dim;
            const bool equal_parity =
                hh.hh_even == qh.total_even && hh.hh_odd == qh.total_odd;
            if (as_json) {
                json row;
                row["n"] = n;
                row["a"] = a;
                row["hh_even"] = big_to_json(hh.hh_even);
                row["hh_odd"] = big_to_json(hh.hh_odd);
                row["qh_dim"] = big_to_json(qh.qh_dim);
                row["qh_even"] = big_to_json(qh.total_even);
                row["qh_odd"] = big_to_json(qh.total_odd);
                row["equal_total"] = equal_total;
                row["equal_parity"] = equal_parity;
                row["high_degree"] = hh.high_degree;
                rows.push_back(row);
            } else {
                std::cout << n << ',' << a << ',' << hh.hh_even.get_str() << ','
                          << hh.hh_odd.get_str() << ',' << qh.qh_dim.get_str() << ','
                          << qh.total_even.get_str() << ',' << qh.total_odd.get_str() << ','
                          << equal_total << ',' << equal_parity << ',' << hh.high_degree
                          << '\n';
            }
        }
    if (as_json) {
        json j;
        j["schema"] = report_schema;
        j["rows"] = rows;
        j["complete"] = !out_of_budget;
        std::cout << j.dump(2) << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mirrordim: exact Hochschild / quantum cohomology dimension checks for "
        "Fermat-type Landau-Ginzburg orbifolds and their mirror hypersurfaces"};
    app.require_subcommand(1);

    CommonOpts verify_o, hh_o, hodge_o, bounds_o, graph_o, homs_o, koszul_o, milnor_o;

    auto* verify = app.add_subcommand(
        "verify", "check dim HH* = dim QH* plus the bijection and degree-bound items");
    add_params(verify, verify_o);
    add_sector_opts(verify, verify_o);

    auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions by sector");
    add_params(hh, hh_o);
    add_sector_opts(hh, hh_o);

    auto* hodge = app.add_subcommand("hodge", "primitive Hodge numbers and dim QH*");
    add_params(hodge, hodge_o, false);

    auto* bounds = app.add_subcommand("bounds", "evaluate the three degree-bound inequalities");
    add_params(bounds, bounds_o, false);

    auto* graph = app.add_subcommand("graph", "thimble hom graph summary");
    add_params(graph, graph_o, false);
    unsigned long long graph_cap = 1'000'000ULL;
    graph->add_option("--vertex-cap", graph_cap, "refuse graphs larger than this");

    auto* homs = app.add_subcommand("homs", "hom-space rank and generators between two thimbles");
    add_params(homs, homs_o, false);
    std::string i_text, j_text;
    homs->add_option("--i", i_text, "source thimble index, comma separated")->required();
    homs->add_option("--j", j_text, "target thimble index, comma separated")->required();

    auto* koszul =
        app.add_subcommand("koszul", "build and verify the Koszul matrix factorization");
    add_params(koszul, koszul_o);
    koszul->add_flag("--full", koszul_o.full, "include the matrices in JSON output");

    auto* milnor = app.add_subcommand("milnor", "Milnor number of the potential");
    add_params(milnor, milnor_o);
    bool milnor_local = false;
    std::string milnor_potential = "deformed";
    milnor->add_flag("--local", milnor_local, "local algebra at the origin");
    milnor->add_option("--potential", milnor_potential, "fermat or deformed")
        ->check(CLI::IsMember({"fermat", "deformed"}));

    auto* sweep = app.add_subcommand("sweep", "tabulate both sides over ranges of n and a");
    int n_min = 2, n_max = 3, a_min = 3, a_max = 8;
    bool sweep_json = false;
    double budget_seconds = 60.0;
    sweep->add_option("--n-min", n_min, "smallest n");
    sweep->add_option("--n-max", n_max, "largest n");
    sweep->add_option("--a-min", a_min, "smallest a");
    sweep->add_option("--a-max", a_max, "largest a");
    sweep->add_flag("--json", sweep_json, "emit JSON rows");
    sweep->add_option("--budget-seconds", budget_seconds,
                      "wall-clock budget; partial output on overrun");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return exit_usage;
    }

    try {
        if (verify->parsed()) return run_verify(verify_o);
        if (hh->parsed()) return run_hh(hh_o);
        if (hodge->parsed()) return run_hodge(hodge_o);
        if (bounds->parsed()) return run_bounds(bounds_o);
        if (graph->parsed()) return run_graph(graph_o, graph_cap);
        if (homs->parsed()) return run_homs(homs_o, i_text, j_text);
        if (koszul->parsed()) return run_koszul(koszul_o);
        if (milnor->parsed()) return run_milnor(milnor_o, milnor_local, milnor_potential);
        if (sweep->parsed()) return run_sweep(n_min, n_max, a_min, a_max, sweep_json,
                                              budget_seconds);
    } catch (const ResourceExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resources;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}
