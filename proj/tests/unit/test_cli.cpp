/*
   Copyright 2026 The netprotect Authors

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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "netprotect/cli.hpp"

using namespace netprotect;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scenario(const char* name)
{
    return (std::filesystem::path(NETPROTECT_SCENARIO_DIR) / name).string();
}

} // namespace

TEST_CASE("min-field")
{
    CHECK(cli({"min-field", "--n", "4", "--t", "1"}).out == "2\n");
    CHECK(cli({"min-field", "--n", "10", "--t", "3"}).out == "8\n");
    CHECK(cli({"min-field", "--n", "10", "--t", "2"}).out == "9\n");
    const Run r = cli({"min-field", "--n", "4", "--t", "3"});
    CHECK(r.code == kExitConfigError);
    CHECK(r.err.find("TooManyFailures") != std::string::npos);
    CHECK(r.err.find("floor(n/2)") != std::string::npos);
}

TEST_CASE("certify")
{
    const Run r = cli({"certify", "--n", "6", "--t", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("certificate n=6 t=2 q=5") != std::string::npos);
    CHECK(r.out.find("all_t_subsets_ok=true") != std::string::npos);
    CHECK(r.out.find("mixed_ok=true") != std::string::npos);

    CHECK(cli({"certify", "--n", "4", "--t", "1"}).code == kExitOk);

    const Run mixed = cli({"certify", "--n", "8", "--t", "3", "--q", "7"});
    CHECK(mixed.code == kExitOk);
    CHECK(mixed.out.find("mixed_ok=false singular=2") != std::string::npos);
    CHECK(mixed.out.find("counterexample rows=0,2 columns=0,3") != std::string::npos);

    const Run sweep = cli({"certify", "--n", "8", "--t", "3", "--sweep-q", "16"});
    CHECK(sweep.code == kExitOk);
    CHECK(sweep.out == "sweep n=8 t=3 q=7..16\n"
                       "q=7 all_t_subsets_ok=true mixed_ok=false singular=2\n"
                       "q=8 all_t_subsets_ok=true mixed_ok=true singular=0\n"
                       "q=9 all_t_subsets_ok=true mixed_ok=false singular=1\n"
                       "q=11 all_t_subsets_ok=true mixed_ok=true singular=0\n"
                       "q=13 all_t_subsets_ok=true mixed_ok=true singular=0\n"
                       "q=16 all_t_subsets_ok=true mixed_ok=true singular=0\n");

    CHECK(cli({"certify", "--n", "40", "--t", "20"}).code == kExitConfigError);
    CHECK(cli({"certify", "--n", "6", "--t", "4"}).code == kExitConfigError);
    CHECK(cli({"certify", "--n", "10", "--t", "3", "--q", "7"}).code == kExitConfigError);
}

TEST_CASE("plan")
{
    const Run r = cli({"plan", "--n", "5", "--t", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("round 3 protects 5,1") != std::string::npos);

    const Run q = cli({"plan", "--n", "4", "--t", "1", "--kind", "nps-t2", "--quotas", "2,1,1,0", "--rounds", "4"});
    CHECK(q.code == kExitOk);
    CHECK(q.out.find("s4 -> x x x x") != std::string::npos);

    CHECK(cli({"plan", "--n", "4", "--t", "1", "--kind", "nps-t2", "--quotas", "5,0,0,0", "--rounds", "4"}).code ==
          kExitConfigError);
    CHECK(cli({"plan", "--scenario", scenario("nps_t2_priority.scn")}).code == kExitOk);
}

TEST_CASE("simulate exit codes follow the report")
{
    CHECK(cli({"simulate", "--scenario", scenario("single_failure_gf2.scn")}).code == kExitOk);
    CHECK(cli({"simulate", "--scenario", scenario("two_failures_n6.scn")}).code == kExitOk);
    CHECK(cli({"simulate", "--scenario", scenario("nps_t2_priority.scn")}).code == kExitOk);
    CHECK(cli({"simulate", "--scenario", scenario("random_n8_t2.scn")}).code == kExitOk);

    const Run over = cli({"simulate", "--scenario", scenario("overload_unrecoverable.scn")});
    CHECK(over.code == kExitRecoveryFailed);
    CHECK(over.out.find("outcome=unrecoverable") != std::string::npos);

    const Run singular = cli({"simulate", "--scenario", scenario("singular_mixed_gf7.scn")});
    CHECK(singular.code == kExitRecoveryFailed);
    CHECK(singular.out.find("case=iii outcome=singular-system") != std::string::npos);

    const Run bad = cli({"simulate", "--scenario", scenario("too_many_failures.scn")});
    CHECK(bad.code == kExitConfigError);
    CHECK(bad.err.find("t <= floor(n/2)") != std::string::npos);

    CHECK(cli({"simulate", "--scenario", "/nonexistent.scn"}).code == kExitConfigError);
    CHECK(cli({"simulate"}).code == kExitConfigError);
    CHECK(cli({"frobnicate"}).code == kExitConfigError);
    CHECK(cli({}).code == kExitConfigError);
}

TEST_CASE("simulate --out and --seed")
{
    const auto path = std::filesystem::temp_directory_path() / "netprotect_cli_test_report.txt";
    const Run r = cli({"simulate", "--scenario", scenario("two_failures_n6.scn"), "--out", path.string()});
    CHECK(r.code == kExitOk);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(os.str() == cli({"simulate", "--scenario", scenario("two_failures_n6.scn")}).out);
    std::filesystem::remove(path);

    const Run seeded = cli({"simulate", "--scenario", scenario("two_failures_n6.scn"), "--seed", "99"});
    CHECK(seeded.out.find("seed=99") != std::string::npos);
}

TEST_CASE("simulate output is byte-identical across runs")
{
    for (const char* name : {"random_n8_t2.scn", "nps_t2_priority.scn", "singular_mixed_gf7.scn"}) {
        const Run a = cli({"simulate", "--scenario", scenario(name)});
        const Run b = cli({"simulate", "--scenario", scenario(name)});
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
