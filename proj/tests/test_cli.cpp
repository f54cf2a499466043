#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Target path injected by the build so the tests drive the real binary.
#ifndef PREFATT_BIN
#error "PREFATT_BIN must point at the cli executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string("\"") + PREFATT_BIN + "\" " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("simulate batches are deterministic and thread-count invariant") {
    const std::string args = "simulate --model L --seed-weights 2 --n 64 --r 3 --reps 40";
    const RunResult first = run(args);
    CHECK(first.exit_code == 0);
    CHECK(run(args).out == first.out);

    const std::string threaded = std::string("env PREFATT_THREADS=3 \"") + PREFATT_BIN +
                                 "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(threaded.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    CHECK(out == first.out);
}

TEST_CASE("metadata header: stable config hash, seed shown as given") {
    const std::string base = "simulate --model N --seed-weights 1 1 --n 16 --r 2 --reps 5";
    const RunResult a = run(base + " --master-seed 1");
    const RunResult b = run(base + " --master-seed 2");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out != b.out);
    const std::vector<std::string> la = lines_of(a.out), lb = lines_of(b.out);
    REQUIRE(la.size() >= 5);
    CHECK(la[0] == "# version=0.1.0");
    CHECK(la[1] == "# tool=simulate");
    CHECK(la[2].rfind("# config_hash=", 0) == 0);
    CHECK(la[2] == lb[2]);  // the hash covers the config, not the seed
    CHECK(la[3] == "# master_seed=1");
    CHECK(lb[3] == "# master_seed=2");
    CHECK(la[4] == "rep,n,d1,d2,total_weight");
    CHECK(la.size() == 5 + 5);
}

TEST_CASE("json batches carry the same run under a fixed schema") {
    const RunResult res =
        run("simulate --model L --ell 2 --seed-weights 1 --n 32 --r 2 --reps 7 --format json");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("schema") == "batch/1");
    CHECK(doc.at("version") == "0.1.0");
    CHECK(doc.at("tool") == "simulate");
    CHECK(doc.at("master_seed") == 20170819);
    CHECK(doc.at("columns").size() == 5);
    CHECK(doc.at("rows").size() == 7);
    for (const auto& row : doc.at("rows")) CHECK(row.size() == 5);
}

TEST_CASE("bad requests exit with code two") {
    CHECK(run("verify no-such-suite", true).exit_code == 2);
    CHECK(run("no-such-command", true).exit_code == 2);
    CHECK(run("simulate --n 4 --bogus-flag 1", true).exit_code == 2);

    const RunResult deep = run("simulate --model N --seed-weights 1 1 --n 2 --r 10", true);
    CHECK(deep.exit_code == 2);
    CHECK(deep.out.find("r exceeds vertex count") != std::string::npos);

    const RunResult gamma =
        run("sample-limit --rep gamma-sum --seed-weights 1 1 1 --r 3 --reps 1", true);
    CHECK(gamma.exit_code == 2);
    CHECK(run("sample-limit --rep dirichlet --seed-weights 1 1 --r 2 --reps 1 --max", true)
              .exit_code == 2);
}

TEST_CASE("verify subcommand writes a structured report") {
    const std::string path = "/tmp/prefatt_cli_report.json";
    const RunResult res = run(std::string("verify performance --out ") + path, true);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    const nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc.at("schema") == "verify-report/1");
    CHECK(doc.at("suite") == "performance");
    CHECK(doc.at("pass") == true);
    REQUIRE(doc.at("checks").size() >= 2);
    for (const auto& check : doc.at("checks")) {
        CHECK(check.contains("test_name"));
        CHECK(check.contains("statistic"));
        CHECK(check.contains("threshold"));
        CHECK(check.contains("pass"));
        CHECK(check.contains("n_samples"));
        CHECK(check.contains("seed"));
    }
    std::remove(path.c_str());
}

TEST_CASE("trace output repeats the coupling identity row by row") {
    const RunResult res = run("remy-trace --n 20 --k 2");
    REQUIRE(res.exit_code == 0);
    const std::vector<std::string> lines = lines_of(res.out);
    REQUIRE(lines.size() == 5 + 21);
    CHECK(lines[4] == "step,t1,t2,w1,w2");
    for (std::size_t i = 5; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 5);
        CHECK(cells[1] == cells[3]);
        CHECK(cells[2] == cells[4]);
    }
}

TEST_CASE("coupling samples stay inside the certificate") {
    const RunResult res = run("sample-coupling --b 2 --w 1 --n 50 --reps 100");
    REQUIRE(res.exit_code == 0);
    const std::vector<std::string> lines = lines_of(res.out);
    REQUIRE(lines.size() == 5 + 100);
    for (std::size_t i = 5; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 5);
        CHECK(cells[3] == "7");  // b (4w + b + 1) / 2
        CHECK(cells[4] == "0");
    }
}

TEST_CASE("limit samples keep cumulative order") {
    const RunResult res = run("sample-limit --rep gamma-sum --d1 2 --ell 1 --r 3 --reps 25");
    REQUIRE(res.exit_code == 0);
    const std::vector<std::string> lines = lines_of(res.out);
    REQUIRE(lines.size() == 5 + 25);
    CHECK(lines[4] == "rep,z1,z2,z3,y1,y2,y3");
    for (std::size_t i = 5; i < lines.size(); ++i) {
        const std::vector<std::string> cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 7);
        const double z1 = std::stod(cells[1]), z2 = std::stod(cells[2]),
                     z3 = std::stod(cells[3]);
        CHECK(z1 > 0.0);
        CHECK(z1 <= z2);
        CHECK(z2 <= z3);
        CHECK(std::stod(cells[5]) == doctest::Approx(z2 - z1).epsilon(1e-9));
    }
}
