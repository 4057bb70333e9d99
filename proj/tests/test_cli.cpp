// Drives the installed CLI binary end to end. The binary path arrives in
// ILDPC_CLI and a scratch directory in ILDPC_TMP (set by CTest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "ildpc/parity_check.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("ILDPC_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string tmp_path(const std::string& name) {
    const char* dir = std::getenv("ILDPC_TMP");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("analyze reports the census") {
    const RunResult res = run_cli("analyze --family ring --base 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("vertices: 324") != std::string::npos);
    CHECK(res.output.find("edges: 729") != std::string::npos);
    CHECK(res.output.find("bidegree: (3,9)") != std::string::npos);
}

TEST_CASE("construct then analyze --spec") {
    const std::string spec_path = tmp_path("ring3.spec.json");
    const RunResult cons = run_cli("construct --family ring --base 3 --out " + spec_path);
    CHECK(cons.exit_code == 0);
    const RunResult ana = run_cli("analyze --spec " + spec_path + " --format json");
    CHECK(ana.exit_code == 0);
    CHECK(ana.output.find("\"edges\": 729") != std::string::npos);
}

TEST_CASE("export alist of the field q=3 code") {
    const RunResult res = run_cli("export --family field --base 3 --format alist");
    CHECK(res.exit_code == 0);
    const ildpc::ParityCheckMatrix H = ildpc::import_alist(res.output);
    CHECK(H.rows() == 81);
    CHECK(H.cols() == 243);
    for (std::size_t j = 0; j < H.cols(); ++j) CHECK(H.col(j).size() == 3);
    for (std::size_t i = 0; i < H.rows(); ++i) CHECK(H.row(i).size() == 9);
}

TEST_CASE("rank and rate subcommands") {
    const std::string alist_path = tmp_path("hamming74.alist");
    {
        std::ofstream out(alist_path, std::ios::binary);
        out << ildpc::export_alist(ildpc::testing::hamming74());
    }
    const RunResult rank = run_cli("rank --code " + alist_path);
    CHECK(rank.exit_code == 0);
    CHECK(rank.output.find("rank: 3") != std::string::npos);

    const RunResult rate = run_cli("rate --family field --base 5");
    CHECK(rate.exit_code == 0);
    CHECK(rate.output.find("design_rate: 0.8") != std::string::npos);
    CHECK(rate.output.find("N: 3125") != std::string::npos);
}

TEST_CASE("simulate determinism across runs and threads") {
    const std::string alist_path = tmp_path("hamming74_sim.alist");
    {
        std::ofstream out(alist_path, std::ios::binary);
        out << ildpc::export_alist(ildpc::testing::hamming74());
    }
    const std::string base_args = "simulate --code " + alist_path +
                                  " --ebn0 8:1:8 --max-frames 1000 --seed 7 --min-bit-errors 0";
    const RunResult a = run_cli(base_args + " --threads 1");
    const RunResult b = run_cli(base_args + " --threads 1");
    const RunResult c = run_cli(base_args + " --threads 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
    CHECK(a.output.find("ebn0_db,frames,bits,bit_errors,ber,frame_errors,fer,avg_iters\n") == 0);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("analyze --family field --base 6").exit_code == 1);       // not a prime power
    CHECK(run_cli("analyze --family ring --base 1").exit_code == 1);        // n < 2
    CHECK(run_cli("analyze --family ring").exit_code == 1);                 // missing base
    CHECK(run_cli("analyze --no-such-flag").exit_code == 1);                // unknown flag
    CHECK(run_cli("simulate --ebn0 bad --uncoded-n 10").exit_code == 1);    // malformed grid
}

TEST_CASE("io errors exit with 2") {
    CHECK(run_cli("rank --code /nonexistent/path.alist").exit_code == 2);
    CHECK(run_cli("analyze --family ring --base 3 --out /nonexistent/dir/out.txt").exit_code == 2);
}

TEST_CASE("help is available on every subcommand") {
    for (const std::string sub :
         {"construct", "analyze", "export", "rank", "rate", "simulate"}) {
        const RunResult res = run_cli(sub + " --help");
        CHECK(res.exit_code == 0);
        CHECK(res.output.find("--help") != std::string::npos);
    }
}

TEST_CASE("uncoded baseline via the cli") {
    const RunResult res =
        run_cli("simulate --uncoded-n 100 --ebn0 0:1:0 --max-frames 200 --min-bit-errors 0 --seed 3");
    CHECK(res.exit_code == 0);
    // ber around 0.0786 at 0 dB
    const auto pos = res.output.find('\n');
    REQUIRE(pos != std::string::npos);
    const std::string row = res.output.substr(pos + 1);
    CHECK(row.find("0,") == 0);
}
