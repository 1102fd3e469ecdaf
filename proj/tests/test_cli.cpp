#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "expsieve/report.hpp"

// EXPSIEVE_CLI_PATH is injected by the build; tests drive the real binary.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // the --out file when used
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(EXPSIEVE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

RunResult run_to_file(const std::string& args, const std::string& path) {
    RunResult r;
    r.exit_code = run_cli(args + " --out " + path);
    if (r.exit_code == 0) r.output = expsieve::report::read_file(path);
    std::remove(path.c_str());
    return r;
}

}  // namespace

TEST_CASE("census subcommand emits the pinned schema") {
    const auto r = run_to_file("census --lambda 2 --x 20 --delta 5", "cli_census.tmp");
    REQUIRE(r.exit_code == 0);
    const auto records = expsieve::report::parse_census_csv(r.output);
    REQUIRE(records.size() == 7);
    CHECK(records[0].p == 3);
    CHECK(records[3].p == 11);
    CHECK(records[3].in_E);
}

TEST_CASE("scan subcommand round trips") {
    const auto r = run_to_file("scan --lambda 2 --x 50 --t 20", "cli_scan.tmp");
    REQUIRE(r.exit_code == 0);
    const auto rows = expsieve::report::parse_scan_csv(r.output);
    CHECK(rows.size() == 14);  // primes <= 50 minus p = 2
    for (const auto& row : rows) {
        CHECK(row.exact);
        CHECK(row.max_abs <= row.trivial_bound + 1e-9);
    }
}

TEST_CASE("verify t1 reproduces the worked example") {
    const auto r = run_to_file(
        "verify t1 --lambda 2 --x 100 --t 100 --delta 10 --L 1 --seq identity --gamma ones",
        "cli_t1.tmp");
    REQUIRE(r.exit_code == 0);
    const auto rep = expsieve::report::parse_verify_csv(r.output);
    CHECK(rep.rhs == doctest::Approx(2719685.673001152).epsilon(1e-11));
    CHECK(rep.exact);
    CHECK(rep.ratio == doctest::Approx(rep.lhs / rep.rhs).epsilon(1e-9));
}

TEST_CASE("pairs subcommand contains the optimum row") {
    const auto r = run_to_file("pairs --nmax 8 --grid 100", "cli_pairs.tmp");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("1/8,5/8,15/14,konyagin(2)") != std::string::npos);
}

TEST_CASE("byte-identical output across runs and worker counts") {
    const std::string args = "scan --lambda 2 --x 500 --t 100 --gamma random:7";
    const auto a = run_to_file(args + " --workers 1", "cli_det_a.tmp");
    const auto b = run_to_file(args + " --workers 1", "cli_det_b.tmp");
    const auto c = run_to_file(args + " --workers 4", "cli_det_c.tmp");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
}

TEST_CASE("EXPSIEVE_WORKERS env default is honored") {
    const std::string path = "cli_env.tmp";
    const std::string cmd = std::string("EXPSIEVE_WORKERS=3 ") + EXPSIEVE_CLI_PATH +
                            " census --x 100 --out " + path + " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    const auto env_out = expsieve::report::read_file(path);
    std::remove(path.c_str());
    const auto plain = run_to_file("census --x 100", path);
    CHECK(env_out == plain.output);
}

TEST_CASE("json format emits parseable reports") {
    const auto r = run_to_file("verify t1 --x 50 --t 20 --delta 4 --format json", "cli_json.tmp");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("\"lhs\":") != std::string::npos);
    CHECK(r.output.find("\"exact\":true") != std::string::npos);
}

TEST_CASE("exit code 2 on validation errors") {
    CHECK(run_cli("census --x 2") == 2);
    CHECK(run_cli("census --lambda 1") == 2);
    CHECK(run_cli("verify erdos-murty --delta 0.5") == 2);
    CHECK(run_cli("verify t2 --K 1") == 2);
    CHECK(run_cli("scan --strategy bogus") == 2);
    CHECK(run_cli("scan --seq primepow:2") == 2);
    CHECK(run_cli("lsieve --K 0.5") == 2);
    CHECK(run_cli("unknown-subcommand") == 2);
    CHECK(run_cli("") == 2);  // a subcommand is required
}

TEST_CASE("exit code 2 on a non-increasing sequence file") {
    const std::string seq = "cli_badseq.tmp";
    expsieve::report::write_file(seq, "1\n5\n5\n");
    CHECK(run_cli("scan --x 20 --t 3 --seq file:" + seq) == 2);
    std::remove(seq.c_str());
}

TEST_CASE("exit code 3 on unwritable output") {
    CHECK(run_cli("census --x 20 --out /no_such_dir/out.csv") == 3);
}

TEST_CASE("exit code 0 on help") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("census --help") == 0);
}

TEST_CASE("discrepancy and remaining verifies run clean end to end") {
    CHECK(run_to_file("discrepancy --x 100 --t 50", "cli_d.tmp").exit_code == 0);
    CHECK(run_to_file("lsieve --t 50 --K 20", "cli_l.tmp").exit_code == 0);
    CHECK(run_to_file("suggest --x 1000", "cli_s.tmp").exit_code == 0);
    CHECK(run_to_file("verify t2 --x 50 --t 20 --delta 4 --K 10", "cli_v2.tmp").exit_code == 0);
    CHECK(run_to_file("verify t3 --x 50 --t 20 --delta 4", "cli_v3.tmp").exit_code == 0);
    CHECK(run_to_file("verify corollary --x 200 --t 100", "cli_vc.tmp").exit_code == 0);
    CHECK(run_to_file("verify erdos-murty --x 100 --delta 5", "cli_ve.tmp").exit_code == 0);
    CHECK(run_to_file("verify titchmarsh --x 1000", "cli_vt.tmp").exit_code == 0);
    const auto sug = run_to_file("suggest --x 1000 --epsilon 1", "cli_sug.tmp");
    CHECK(sug.output.find("329617") != std::string::npos);
}
