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

// Drives the installed CLI binary end to end: exit codes, JSON stability
// and cache behaviour. Usage: test_cli_driver <path-to-mirrordim>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

namespace {

#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cli, const std::string& args) {
    const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr, "popen failed for: " << command);
    RunResult r;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    REQUIRE(argc == 2, "expected the CLI path as the only argument");
    const std::string cli = argv[1];
    ::unsetenv("MIRRORDIM_CACHE_DIR");
    ::unsetenv("XDG_CACHE_HOME");

    using nlohmann::json;

    {  // headline verification, fast path
        const RunResult r =
            run(cli, "verify -n 2 -a 6 --trust-sector-criterion --json --no-cache");
        REQUIRE(r.exit_code == 0, "verify 2 6 should exit 0, got " << r.exit_code);
        const json j = json::parse(r.out);
        REQUIRE(j["all_pass"] == true, "verify 2 6 all_pass");
        REQUIRE(j["equal_total"] == true, "verify 2 6 equal_total");
        REQUIRE(j["hh"]["hh_even"] == 108, "verify 2 6 hh_even");
        REQUIRE(j["hh"]["hh_odd"] == 0, "verify 2 6 hh_odd");
        REQUIRE(j["hodge"]["qh_dim"] == 108, "verify 2 6 qh_dim");
        // emitted JSON is already in canonical form
        REQUIRE(json::parse(r.out).dump(2) + "\n" == r.out, "verify JSON round-trip bytes");
        const RunResult full =
            run(cli, "verify -n 2 -a 6 --trust-sector-criterion --json --full --no-cache");
        REQUIRE(full.exit_code == 0, "verify --full exit code");
        const json jf = json::parse(full.out);
        REQUIRE(jf["hh"]["sectors"].size() == 216, "verify --full sector list size");
        REQUIRE(json::parse(full.out).dump(2) + "\n" == full.out,
                "verify --full JSON round-trip bytes");
        std::puts("[ok] verify 2 6");
    }
    {
        const RunResult r =
            run(cli, "verify -n 3 -a 8 --trust-sector-criterion --json --no-cache");
        REQUIRE(r.exit_code == 0, "verify 3 8 exit code");
        const json j = json::parse(r.out);
        REQUIRE(j["hh"]["hh_even"] == 4, "verify 3 8 hh_even");
        REQUIRE(j["hh"]["hh_odd"] == 2100, "verify 3 8 hh_odd");
        REQUIRE(j["hodge"]["qh_dim"] == 2104, "verify 3 8 qh_dim");
        REQUIRE(j["equal_parity"] == true, "verify 3 8 equal_parity");
        std::puts("[ok] verify 3 8");
    }
    {  // below the degree bound: equality computed, bounds flagged, exit 1
        const RunResult r =
            run(cli, "verify -n 2 -a 5 --trust-sector-criterion --json --no-cache");
        REQUIRE(r.exit_code == 1, "verify 2 5 should exit 1, got " << r.exit_code);
        const json j = json::parse(r.out);
        REQUIRE(j["equal_total"] == true, "verify 2 5 equality still holds");
        REQUIRE(j["bounds"]["all_pass"] == false, "verify 2 5 bounds flagged");
        std::puts("[ok] verify 2 5");
    }
    {  // usage errors
        REQUIRE(run(cli, "verify -a 6").exit_code == 2, "missing -n is a usage error");
        REQUIRE(run(cli, "frobnicate").exit_code == 2, "unknown subcommand is a usage error");
        REQUIRE(run(cli, "--help").exit_code == 0, "--help exits 0");
        std::puts("[ok] usage errors");
    }
    {  // resource caps exit 3
        REQUIRE(run(cli, "graph -n 2 -a 100 --vertex-cap 10").exit_code == 3,
                "graph over the vertex cap should exit 3");
        std::puts("[ok] resource cap");
    }
    {  // warm cache output is byte-identical to a cold run (honest sectors)
        const auto dir = std::filesystem::temp_directory_path() /
                         ("mirrordim_cli_cache_" + std::to_string(::getpid()));
        std::filesystem::remove_all(dir);
        const std::string flags = " --json --cache-dir '" + dir.string() + "'";
        const RunResult cold = run(cli, "hh -n 2 -a 6" + flags);
        REQUIRE(cold.exit_code == 0, "hh cold run");
        const RunResult warm = run(cli, "hh -n 2 -a 6" + flags);
        REQUIRE(warm.exit_code == 0, "hh warm run");
        REQUIRE(cold.out == warm.out, "hh warm cache output differs from cold run");
        REQUIRE(!std::filesystem::is_empty(dir), "cache directory was not populated");
        const RunResult vcold = run(cli, "verify -n 2 -a 6" + flags);
        const RunResult vwarm = run(cli, "verify -n 2 -a 6" + flags);
        REQUIRE(vcold.exit_code == 0 && vwarm.exit_code == 0, "verify cache runs");
        REQUIRE(vcold.out == vwarm.out, "verify warm cache output differs from cold run");
        const json j = json::parse(vcold.out);
        REQUIRE(j["hh"]["trusted"] == false, "default verify computes sectors honestly");
        std::filesystem::remove_all(dir);
        std::puts("[ok] cache byte-identity");
    }
    {  // hom descriptors
        const RunResult r = run(cli, "homs -n 2 -a 6 --i 1,1,1 --j 2,1,2 --json");
        REQUIRE(r.exit_code == 0, "homs exit code");
        const json j = json::parse(r.out);
        REQUIRE(j["rank"] == 1, "homs rank");
        REQUIRE(j["case"] == "forward", "homs case");
        REQUIRE(j["generators"][0]["word"] == json::array({1, 3}), "homs generator word");
        REQUIRE(run(cli, "homs -n 2 -a 6 --i 9,1,1 --j 1,1,1").exit_code == 2,
                "out-of-range index is a usage error");
        std::puts("[ok] homs");
    }
    {  // milnor numbers through the CLI
        const RunResult r = run(cli, "milnor -n 2 -a 6 --local --json");
        REQUIRE(r.exit_code == 0, "milnor exit code");
        REQUIRE(json::parse(r.out)["milnor_number"] == 193, "local milnor number");
        const RunResult g = run(cli, "milnor -n 2 -a 6 --potential fermat --json");
        REQUIRE(json::parse(g.out)["milnor_number"] == 625, "fermat milnor number");
        std::puts("[ok] milnor");
    }
    {  // sweep CSV
        const RunResult r = run(cli, "sweep --n-min 2 --n-max 2 --a-min 5 --a-max 7");
        REQUIRE(r.exit_code == 0, "sweep exit code");
        REQUIRE(r.out.find("n,a,hh_even") != std::string::npos, "sweep header");
        REQUIRE(r.out.find("2,6,108,0,108,108,0,1,1,1") != std::string::npos,
                "sweep row for a=6");
        std::puts("[ok] sweep");
    }
    {  // koszul and bounds subcommands
        REQUIRE(run(cli, "koszul -n 2 -a 6 --json").exit_code == 0, "koszul exit code");
        REQUIRE(run(cli, "bounds -n 2 -a 6").exit_code == 0, "bounds 2 6 exit code");
        REQUIRE(run(cli, "bounds -n 2 -a 5").exit_code == 1, "bounds 2 5 exit code");
        const RunResult r = run(cli, "hodge -n 3 -a 8 --json");
        REQUIRE(json::parse(r.out)["qh_dim"] == 2104, "hodge qh_dim");
        std::puts("[ok] koszul, bounds, hodge");
    }

    std::puts("cli driver: all checks passed");
    return 0;
}
