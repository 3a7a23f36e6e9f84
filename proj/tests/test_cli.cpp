#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SPECSTATS_CLI_PATH
#error "SPECSTATS_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    const auto out_path = fs::temp_directory_path() / "specstats_cli_out.txt";
    const std::string cmd =
        std::string(SPECSTATS_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    fs::remove(out_path);
    return {WEXITSTATUS(status), text};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = (fs::temp_directory_path() / name).string();
    std::ofstream out(path);
    out << content;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cli stats: exact rational output on the worked example") {
    const auto input = write_temp("cli_symm3.csv", "1,2,3\n");
    const auto r = run_cli("stats --input " + input + " --degree 2 --kind spectral_k --format json");
    CHECK(r.exit_code == 0);
    const auto j = json::parse(r.output);
    CHECK(j["input"]["exact"] == true);
    bool saw_k1 = false, saw_k2 = false, saw_k11 = false;
    for (const auto& row : j["results"]) {
        if (row["lambda"] == json::array({1})) {
            CHECK(row["value_rational"] == "2");
            saw_k1 = true;
        }
        if (row["lambda"] == json::array({2})) {
            CHECK(row["value_rational"] == "1/4");
            saw_k2 = true;
        }
        if (row["lambda"] == json::array({1, 1})) {
            CHECK(row["value_rational"] == "47/12");
            saw_k11 = true;
        }
    }
    CHECK(saw_k1);
    CHECK(saw_k2);
    CHECK(saw_k11);

    const auto rc = run_cli("stats --input " + input + " --degree 2 --kind classical_k --format json");
    CHECK(rc.exit_code == 0);
    const auto jc = json::parse(rc.output);
    for (const auto& row : jc["results"]) {
        if (row["lambda"] == json::array({2})) CHECK(row["value_rational"] == "1");
        if (row["lambda"] == json::array({1, 1})) CHECK(row["value_rational"] == "11/3");
    }
    std::remove(input.c_str());
}

TEST_CASE("cli stats: degree above the sample size exits 1") {
    const auto input = write_temp("cli_symm3b.csv", "1,2,3\n");
    const auto r = run_cli("stats --input " + input + " --degree 4");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("degree exceeds sample size") != std::string::npos);
    std::remove(input.c_str());
}

TEST_CASE("cli stats: malformed input names line and token") {
    const auto input = write_temp("cli_bad.csv", "1,x,3\n");
    const auto r = run_cli("stats --input " + input);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("line 1") != std::string::npos);
    CHECK(r.output.find("token 2") != std::string::npos);
    std::remove(input.c_str());
}

TEST_CASE("cli sample: determinism, m = n permutation, round trip into stats") {
    const auto input = write_temp("cli_pop5.csv", "1,2,3,4,5\n");
    const auto out1 = (fs::temp_directory_path() / "cli_s1.csv").string();
    const auto out2 = (fs::temp_directory_path() / "cli_s2.csv").string();

    CHECK(run_cli("sample --input " + input + " --m 5 --count 1 --seed 11 --output " + out1)
              .exit_code == 0);
    const auto row = slurp(out1);
    // sorted multiset equality with the input within 1e-8
    {
        std::stringstream ss(row);
        std::string tok;
        int idx = 1;
        while (std::getline(ss, tok, ',')) {
            CHECK(std::abs(std::stod(tok) - idx) <= 1e-8);
            ++idx;
        }
        CHECK(idx == 6);
    }

    CHECK(run_cli("sample --input " + input + " --m 3 --count 4 --seed 77 --output " + out1)
              .exit_code == 0);
    CHECK(run_cli("sample --input " + input + " --m 3 --count 4 --seed 77 --output " + out2)
              .exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));

    // sampled rows feed back into stats without error (float path)
    const auto rt = run_cli("stats --input " + out1 + " --degree 2 --format json");
    CHECK(rt.exit_code == 0);
    CHECK(json::parse(rt.output)["input"]["exact"] == false);

    CHECK(run_cli("sample --input " + input + " --m 9 --count 1 --seed 1").exit_code == 1);

    std::remove(input.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("cli verify: pass verdict exits 0, gate override forces exit 2") {
    const auto out = (fs::temp_directory_path() / "cli_verify.json").string();
    const auto r = run_cli(
        "verify --suite inheritance --builtin arange8 --m 4 --replicates 2000 --seed 5 "
        "--output " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    const auto j = json::parse(slurp(out));
    CHECK(j["config"]["population_name"] == "arange8");

    // an absurdly small gate makes the same run FAIL: exit code contract
    const auto rf = run_cli(
        "verify --suite inheritance --builtin arange8 --m 4 --replicates 2000 --seed 5 "
        "--z-gate 0.0001");
    CHECK(rf.exit_code == 2);
    CHECK(rf.output.find("FAIL") != std::string::npos);

    // config errors exit 1
    CHECK(run_cli("verify --suite inheritance --builtin arange8 --m 40 --seed 5")
              .exit_code == 1);
    CHECK(run_cli("verify --suite inheritance --builtin nope --m 4 --seed 5").exit_code == 1);
    std::remove(out.c_str());
}

TEST_CASE("cli verify: limit suite is non-gating") {
    const auto r = run_cli("verify --suite limit --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("DEMONSTRATION") != std::string::npos);
}

TEST_CASE("cli tables: coefficient comparison marks the known misprints") {
    const auto r2 = run_cli("tables --degree 2 --n 4");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("1/15") != std::string::npos);
    CHECK(r2.output.find("-1/60") != std::string::npos);
    CHECK(r2.output.find("K_(1^2) annotation") != std::string::npos);

    const auto r3 = run_cli("tables --degree 3 --n 8");
    CHECK(r3.exit_code == 0);
    // s_(3) = 2 and d_(2,1) = 3 appear in the class table
    CHECK(r3.output.find("(3)") != std::string::npos);

    const auto r4 = run_cli("tables --degree 4 --n 8");
    CHECK(r4.exit_code == 0);
    CHECK(r4.output.find("printed:MISMATCH") != std::string::npos);  // K_(4) row
    CHECK(r4.output.find("closed:MATCH") != std::string::npos);

    CHECK(run_cli("tables --degree 9 --n 8").exit_code == 1);
}

TEST_CASE("cli usage errors exit nonzero") {
    CHECK(run_cli("stats").exit_code != 0);           // missing required --input
    CHECK(run_cli("bogus-subcommand").exit_code != 0);
    CHECK(run_cli("sample --input /nonexistent.csv --m 2 --seed 1").exit_code == 1);
}
