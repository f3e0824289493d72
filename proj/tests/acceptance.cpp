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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Usage: acceptance <path-to-mirrordim-cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "mirrordim/mirrordim.hpp"

namespace {

using namespace mirrordim;

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& cli, const std::string& args) {
    const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Independent oracle A: free sectors by direct enumeration of the
// residue vectors with no zero entry and zero sum.
unsigned long long enumerate_free_sectors(int m, int a) {
    unsigned long long total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<unsigned long long>(a - 1);
    unsigned long long count = 0;
    for (unsigned long long code = 0; code < total; ++code) {
        unsigned long long c = code;
        int sum = 0;
        for (int i = 0; i < m; ++i) {
            sum = (sum + 1 + static_cast<int>(c % static_cast<unsigned long long>(a - 1))) % a;
            c /= static_cast<unsigned long long>(a - 1);
        }
        if (sum == 0) ++count;
    }
    return count;
}

// Independent oracle B: primitive dimensions by brute-force enumeration
// of bounded exponent vectors.
unsigned long long enumerate_slice(int parts, int lo, int hi, long target) {
    std::vector<int> v(static_cast<std::size_t>(parts), lo);
    unsigned long long count = 0;
    while (true) {
        long sum = 0;
        for (int x : v) sum += x;
        if (sum == target) ++count;
        int k = parts - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == hi) {
            v[static_cast<std::size_t>(k)] = lo;
            --k;
        }
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];
    }
    return count;
}

void criterion_1(const std::string& cli) {
    struct Case {
        int n, a;
        long total, even, odd;
    };
    const std::vector<Case> cases = {{2, 6, 108, 108, 0}, {2, 7, 189, 189, 0},
                                     {3, 8, 2104, 4, 2100}};
    bool pass = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        // two independent oracles for the common value
        unsigned long long oracle_a =
            static_cast<unsigned long long>(c.n + 1) + enumerate_free_sectors(c.n + 2, c.a);
        BigInt oracle_b(c.n + 1);
        for (int p = 0; p <= c.n; ++p)
            oracle_b += bounded_composition_count(c.n + 2, 0, c.a - 2,
                                                  static_cast<long>(p + 1) * c.a - (c.n + 2));
        if (oracle_a != static_cast<unsigned long long>(c.total) || oracle_b != c.total) {
            pass = false;
            detail << "oracles disagree with frozen totals for n=" << c.n << " a=" << c.a << "; ";
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const RunResult r = run_cli(cli, "verify -n " + std::to_string(c.n) + " -a " +
                                             std::to_string(c.a) +
                                             " --trust-sector-criterion --json --no-cache");
        const double elapsed = seconds_since(t0);
        if (r.exit_code != 0) {
            pass = false;
            detail << "exit " << r.exit_code << " for n=" << c.n << " a=" << c.a << "; ";
            continue;
        }
        const json j = json::parse(r.out, nullptr, false);
        const bool values_ok = !j.is_discarded() && j["equal_total"] == true &&
                               j["equal_parity"] == true && j["hh"]["hh_even"] == c.even &&
                               j["hh"]["hh_odd"] == c.odd && j["hodge"]["qh_dim"] == c.total;
        if (!values_ok) {
            pass = false;
            detail << "unexpected report for n=" << c.n << " a=" << c.a << "; ";
        }
        if (elapsed >= 10.0) {
            pass = false;
            detail << "verify n=" << c.n << " a=" << c.a << " took " << elapsed << "s; ";
        }
    }
    report(1, "dim HH* = dim QH* for (2,6), (2,7), (3,8) via the CLI", pass, detail.str());
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    const Polynomial w = deformed_potential(2, 6);
    const GradingContext grading = GradingContext::identity(4, 6);
    const Ideal I = make_ideal(partials(w), 4, MonomialOrder{});
    const QuotientBasis qb =
        local_quotient_basis(I, default_local_options(4, 6), {}, &grading);
    if (qb.graded_dim(zero_class(4, 6)) != 3) {
        pass = false;
        detail << "invariant dim " << qb.graded_dim(zero_class(4, 6)) << " != 3; ";
    }
    std::vector<Monomial> invariant;
    for (const auto& m : qb.monomials)
        if (monomial_class(m, 6).is_zero()) invariant.push_back(m);
    const std::vector<Monomial> expected = {Monomial::one(4), Monomial({1, 1, 1, 1}),
                                            Monomial({2, 2, 2, 2})};
    if (invariant != expected) {
        pass = false;
        detail << "invariant monomials are not {1, q, q^2}; ";
    }
    const Polynomial q = Polynomial::monomial(Monomial({1, 1, 1, 1}), Rational(1), w.order());
    if (!normal_form(q.pow(3), qb.gb).is_zero()) {
        pass = false;
        detail << "NF(q^3) != 0; ";
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 300.0) {
        pass = false;
        detail << "took " << elapsed << "s;";
    } else {
        detail << "elapsed " << elapsed << "s";
    }
    report(2, "identity-sector Jacobi ring of (2,6): invariant part {1, q, q^2}, q^3 = 0",
           pass, detail.str());
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    const auto cache_dir = std::filesystem::temp_directory_path() /
                           ("mirrordim_acceptance_" + std::to_string(::getpid()));
    std::filesystem::remove_all(cache_dir);
    const Cache cache = Cache::at(cache_dir);
    HochschildOptions opts;  // honest: every quotient is computed
    opts.cache = &cache;
    const DiagonalGroup G = DiagonalGroup::build(GroupVariant::G, 2, 6);
    unsigned long long mixed = 0, checked = 0;
    for (unsigned long long i = 0; i < G.element_count(); ++i) {
        const GroupElement gamma = G.element_at(i);
        if (gamma.is_identity()) continue;
        const SectorReport s = sector_contribution(G, gamma, opts);
        ++checked;
        if (!s.fixed.empty()) {
            ++mixed;
            if (s.contribution != 0) {
                pass = false;
                detail << "nonzero contribution at gamma index " << i << "; ";
            }
            if (!s.honest) {
                pass = false;
                detail << "sector not computed honestly; ";
            }
        }
    }
    if (checked != 215 || mixed != 110) {
        pass = false;
        detail << "sector partition off: checked " << checked << ", mixed " << mixed << "; ";
    }
    std::filesystem::remove_all(cache_dir);
    const double elapsed = seconds_since(t0);
    if (elapsed >= 600.0) {
        pass = false;
        detail << "took " << elapsed << "s;";
    } else {
        detail << "elapsed " << elapsed << "s";
    }
    report(3, "all 110 mixed sectors of (2,6) vanish under honest computation", pass,
           detail.str());
}

void criterion_4() {
    bool pass = true;
    std::ostringstream detail;
    const std::vector<std::tuple<int, int, std::size_t>> cases = {
        {2, 4, 81}, {2, 6, 625}, {3, 5, 1024}};
    for (const auto& [n, a, expected] : cases) {
        for (const std::string name : {"degrevlex", "deglex", "lex"}) {
            const MonomialOrder ord = MonomialOrder::named(name);
            const std::size_t mu = milnor_number(fermat_potential(n, a, ord), false);
            if (mu != expected) {
                pass = false;
                detail << "milnor(" << n << "," << a << "," << name << ") = " << mu << " != "
                       << expected << "; ";
            }
        }
        // Gorenstein palindrome of the graded dimensions
        const QuotientBasis qb = quotient_basis(
            make_ideal(partials(fermat_potential(n, a)), n + 2, MonomialOrder{}));
        std::vector<int> hist(static_cast<std::size_t>((n + 2) * (a - 2)) + 1, 0);
        for (const auto& m : qb.monomials) ++hist[static_cast<std::size_t>(m.degree())];
        for (std::size_t d = 0; d < hist.size(); ++d)
            if (hist[d] != hist[hist.size() - 1 - d]) {
                pass = false;
                detail << "palindrome broken at degree " << d << " for (" << n << "," << a
                       << "); ";
                break;
            }
    }
    report(4, "fermat milnor numbers (a-1)^{n+2} across three orders + palindrome", pass,
           detail.str());
}

void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (int n = 2; n <= 3; ++n)
        for (int a = 2 * n + 2; a <= 10; ++a)
            for (int p = 0; p <= n; ++p) {
                const BijectionWitness w = index_bijection_check(n, a, p);
                const BigInt oracle(static_cast<unsigned long>(enumerate_slice(
                    n + 2, 1, a - 1, static_cast<long>(p + 1) * a)));
                if (!w.equal || w.count_i != oracle || w.count_j != oracle) {
                    pass = false;
                    detail << "mismatch at n=" << n << " a=" << a << " p=" << p << "; ";
                }
            }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
        pass = false;
        detail << "took " << elapsed << "s;";
    }
    report(5, "index bijection |j| = (p+1)a for n in {2,3}, 2n+2 <= a <= 10, all p", pass,
           detail.str());
}

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (int a = 3; a <= 6; ++a) {
        std::vector<std::vector<int>> indices;
        std::vector<int> v(3, 1);
        while (true) {
            indices.push_back(v);
            int k = 2;
            while (k >= 0 && v[static_cast<std::size_t>(k)] == a - 1) {
                v[static_cast<std::size_t>(k)] = 1;
                --k;
            }
            if (k < 0) break;
            ++v[static_cast<std::size_t>(k)];
        }
        for (const auto& iv : indices)
            for (const auto& jv : indices) {
                const ThimbleIndex i{iv}, j{jv};
                const HomDescriptor d = hom_descriptor(i, j, 2, a);
                const HomDescriptor rev = hom_descriptor(j, i, 2, a);
                if (iv == jv) {
                    if (d.rank != 2 || d.generators.size() != 2 ||
                        d.generators[1].size() != d.generators[0].size() + 4)
                        pass = false;
                } else if (d.rank != 0 && d.rank != 1) {
                    pass = false;
                }
                if ((d.rank != 0) != (rev.rank != 0)) pass = false;
                if (d.kind == HomDescriptor::Case::forward) {
                    std::size_t ups = 0;
                    for (int l = 0; l < 3; ++l)
                        if (jv[static_cast<std::size_t>(l)] - iv[static_cast<std::size_t>(l)] ==
                            1)
                            ++ups;
                    if (d.generators[0].size() != ups) pass = false;
                }
                if (d.kind == HomDescriptor::Case::backward) {
                    std::size_t same = 0;
                    for (int l = 0; l < 3; ++l)
                        if (jv[static_cast<std::size_t>(l)] == iv[static_cast<std::size_t>(l)])
                            ++same;
                    if (d.generators[0].size() != same + 1) pass = false;
                }
            }
        if (!pass && detail.str().empty()) detail << "table mismatch at a=" << a << "; ";
    }
    const GraphSummary g = hom_graph(2, 6);
    if (g.vertices != 125 || g.components != 1) {
        pass = false;
        detail << "graph summary " << g.vertices << " vertices, " << g.components
               << " components; ";
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
        pass = false;
        detail << "took " << elapsed << "s;";
    }
    report(6, "thimble hom table exhaustive for (2, a<=6) and connected graph for (2,6)", pass,
           detail.str());
}

void criterion_7() {
    bool pass = true;
    std::ostringstream detail;
    for (int n = 2; n <= 6; ++n)
        for (int a = 3; a <= 2 * n + 6; ++a) {
            const BoundsReport rep = check_degree_bounds(n, a);
            if (rep.all_pass != (a > 2 * n + 1)) {
                pass = false;
                detail << "bounds conjunction wrong at n=" << n << " a=" << a << "; ";
            }
        }
    report(7, "degree bounds pass exactly when a > 2n+1, swept over 2<=n<=6", pass,
           detail.str());
}

void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    const Polynomial w = deformed_potential(2, 6);
    const MatrixFactorization mf = koszul_mf(2, 6);
    const MFReport good = verify_mf(mf, w);
    if (!good.pass()) {
        pass = false;
        detail << "default factorization failed: " << good.first_failure << "; ";
    }
    MatrixFactorization broken = mf;
    broken.P[5][1] += Polynomial::constant(Rational(1), 4, w.order());
    const MFReport bad = verify_mf(broken, w);
    if (bad.pass() || bad.first_failure.empty()) {
        pass = false;
        detail << "injected fault not detected; ";
    } else if (bad.first_failure.find("(5, 1)") == std::string::npos &&
               bad.first_failure.find("(5,") == std::string::npos) {
        // the fault must at least be located somewhere concrete
        pass = false;
        detail << "fault located at '" << bad.first_failure << "'; ";
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 10.0) {
        pass = false;
        detail << "took " << elapsed << "s;";
    }
    report(8, "koszul factorization: P*Q = Q*P = w*Id, homogeneous entries, faults located",
           pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-mirrordim-cli>\n";
        return 2;
    }
    ::unsetenv("MIRRORDIM_CACHE_DIR");
    ::unsetenv("XDG_CACHE_HOME");
    criterion_1(argv[1]);
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
