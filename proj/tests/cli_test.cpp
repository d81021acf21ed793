#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "hookbias/analysis.hpp"
#include "hookbias/coefficient_table.hpp"

namespace fs = std::filesystem;

namespace {

struct run_result {
    int code = -1;
    std::string out;
};

run_result run_cli(const std::string& args, const std::string& env = "") {
    const std::string out_file = "/tmp/hookbias_cli_test_out.txt";
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += std::string(HOOKBIAS_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int rc = std::system(cmd.c_str());
    run_result r;
    if (WIFEXITED(rc))
        r.code = WEXITSTATUS(rc);
    std::ifstream is(out_file, std::ios::binary);
    std::stringstream buf;
    buf << is.rdbuf();
    r.out = buf.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::stringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
}

} // namespace

TEST_CASE("compute emits the canonical table format") {
    const auto r = run_cli("compute --series q_count --N 30 --format tsv");
    CHECK(r.code == 0);
    const auto expected = hookbias::coefficient_table::from_series(
        "q_count[N=30]", hookbias::q_count_series(30));
    CHECK(r.out == expected.to_text());
    CHECK(r.out.find("#series=q_count[N=30]") == 0);
}

TEST_CASE("alias names resolve to the same series") {
    const auto a = run_cli("compute --series b2i --i 3 --N 12 --format tsv");
    const auto b = run_cli("compute --series b_2i --i 3 --N 12 --format tsv");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("#series=b_2i[i=3][N=12]") == 0);
}

TEST_CASE("repeated runs are byte-identical without the timestamp") {
    const std::string args = "compute --series b32 --N 25 --format json --no-timestamp";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"generated\"") == std::string::npos);

    const auto stamped = run_cli("compute --series b32 --N 25 --format json");
    CHECK(stamped.code == 0);
    CHECK(stamped.out.find("\"generated\"") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("compute --series nosuch --N 10").code == 2);
    CHECK(run_cli("compute --series b32 --N 10 --bogus-flag").code == 2);
    CHECK(run_cli("compute --series b_t1 --N 10").code == 2);  // missing --t
    CHECK(run_cli("compute --series b32").code == 2);          // missing --N
    CHECK(run_cli("verify --campaign nosuch").code == 2);
    CHECK(run_cli("verify --campaign even-k --N 50").code == 2); // missing --k
    CHECK(run_cli("search --k 4 --N 50").code == 2);             // even k rejected
    CHECK(run_cli("bijection-check --i 9 --n 20").code == 2);
    const auto guard = run_cli("compute --series q_count --N 50001");
    CHECK(guard.code == 2);
    CHECK(guard.out.find("--force") != std::string::npos);
}

TEST_CASE("verification campaigns drive exit codes") {
    const auto pass = run_cli("verify --campaign theorem1 --N 100 --no-timestamp");
    CHECK(pass.code == 0);
    CHECK(pass.out.find("status: pass") != std::string::npos);

    const auto conjecture = run_cli("verify --campaign even-k --k 10 --N 60 --no-timestamp");
    CHECK(conjecture.code == 0); // findings, not defects
    CHECK(conjecture.out.find("grade: conjecture") != std::string::npos);
    CHECK(conjecture.out.find("status: fail") != std::string::npos);

    const auto info = run_cli("verify --campaign s-ratio --N 120 --k 1 --no-timestamp");
    CHECK(info.code == 0);
    CHECK(info.out.find("status: informational") != std::string::npos);
}

TEST_CASE("bijection-check reports the member triplets") {
    const auto r = run_cli("bijection-check --i 3 --n 33 --format json --no-timestamp");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"check-name\": \"bijection-suite\"") != std::string::npos);
    CHECK(r.out.find("((11,11,5),(),(6))") != std::string::npos);
    CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("export and import round-trip byte for byte") {
    const std::string path1 = "/tmp/hookbias_cli_test_rt1.tsv";
    const std::string path2 = "/tmp/hookbias_cli_test_rt2.tsv";
    CHECK(run_cli("export --series diff_2k --k 4 --N 30 --out " + path1).code == 0);
    CHECK(run_cli("import --in " + path1 + " --out " + path2).code == 0);
    CHECK(slurp(path1) == slurp(path2));
    CHECK(!slurp(path1).empty());
    fs::remove(path1);
    fs::remove(path2);
}

TEST_CASE("broken input files exit with code 3") {
    const std::string path = "/tmp/hookbias_cli_test_bad.tsv";
    spit(path, "#series=x\n#trunc=1\n#version=1\n0\t0\n1\t00\n");
    const auto r = run_cli("import --in " + path);
    CHECK(r.code == 3);
    CHECK(r.out.find("line 5") != std::string::npos);
    fs::remove(path);
    CHECK(run_cli("import --in /tmp/hookbias_cli_test_missing.tsv").code == 3);
}

TEST_CASE("cache directory is honored") {
    const fs::path dir = "/tmp/hookbias_cli_test_cache";
    fs::remove_all(dir);
    const std::string env = "HOOKBIAS_CACHE_DIR=" + dir.string();
    const auto first = run_cli("compute --series q_count --N 20 --format tsv", env);
    CHECK(first.code == 0);
    const fs::path cached = dir / "q_count[N=20].tsv";
    REQUIRE(fs::exists(cached));
    CHECK(slurp(cached.string()) == first.out);

    // tamper with the cached copy; a second run must serve the cached bytes
    std::string text = slurp(cached.string());
    const auto pos = text.find("\n20\t");
    REQUIRE(pos != std::string::npos);
    text = text.substr(0, pos) + "\n20\t999\n";
    spit(cached.string(), text);
    const auto second = run_cli("compute --series q_count --N 20 --format tsv", env);
    CHECK(second.code == 0);
    CHECK(second.out == text);
    fs::remove_all(dir);
}
