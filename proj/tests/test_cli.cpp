#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "quantfam/csv.hpp"

#ifndef QUANTFAM_CLI_PATH
#error "QUANTFAM_CLI_PATH must be defined"
#endif

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("quantfam_cli_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    std::string cmd = std::string(QUANTFAM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) { return quantfam::read_text_file(path); }

void write(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("sample then lmom on hand-checked data") {
    TempDir dir;
    write(dir.file("four.csv"), "x\n1\n2\n3\n4\n");
    CHECK(run("lmom --input " + dir.file("four.csv") + " --column x --out " +
              dir.file("lm.json")) == 0);
    auto j = nlohmann::json::parse(slurp(dir.file("lm.json")));
    CHECK(j["l1"].get<double>() == doctest::Approx(2.5));
    CHECK(j["l2"].get<double>() == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("sample is reproducible and carries a sidecar") {
    TempDir dir;
    std::string cmd = "sample --family gh --params '{\"a\":0,\"b\":1,\"g\":0.5,\"h\":0.2}' "
                      "--n 100 --seed 7 --out " +
                      dir.file("s");
    CHECK(run(cmd) == 0);
    std::string first = slurp(dir.file("s.csv"));
    CHECK(run(cmd) == 0);
    CHECK(slurp(dir.file("s.csv")) == first);
    CHECK(first.rfind("x\n", 0) == 0);

    auto side = nlohmann::json::parse(slurp(dir.file("s.json")));
    CHECK(side["seed"] == 7);
    CHECK(side["n"] == 100);
    CHECK(side["spec"]["kind"] == "gh");
}

TEST_CASE("fit writes byte-identical JSON on identical invocations") {
    TempDir dir;
    CHECK(run("sample --family gh --params '{\"a\":0,\"b\":1,\"g\":0.3,\"h\":0.1}' --n 400 "
              "--seed 11 --out " +
              dir.file("d")) == 0);
    std::string fit_cmd = "fit --family gh --method molm --input " + dir.file("d.csv") +
                          " --column x --out " + dir.file("fit.json");
    CHECK(run(fit_cmd) == 0);
    std::string first = slurp(dir.file("fit.json"));
    CHECK(run(fit_cmd) == 0);
    CHECK(slurp(dir.file("fit.json")) == first);

    auto j = nlohmann::json::parse(first);
    CHECK(j["method"] == "molm");
    CHECK(j["converged"] == true);
    CHECK(j["spec"]["g"].get<double>() == doctest::Approx(0.3).epsilon(0.5));
    CHECK(j["diagnostics"].contains("seed"));
}

TEST_CASE("fit output feeds gof directly") {
    TempDir dir;
    CHECK(run("sample --family gh --params '{\"a\":0,\"b\":1,\"g\":0.4,\"h\":0.1}' --n 500 "
              "--seed 3 --out " +
              dir.file("d")) == 0);
    CHECK(run("fit --family gh --method molm --input " + dir.file("d.csv") +
              " --column x --out " + dir.file("fit.json")) == 0);
    CHECK(run("gof --input " + dir.file("d.csv") + " --column x --spec " + dir.file("fit.json") +
              " --out " + dir.file("gof.json") + " --qq " + dir.file("qq.csv")) == 0);
    auto g = nlohmann::json::parse(slurp(dir.file("gof.json")));
    CHECK(g["n"] == 500);
    CHECK(g["rmse"].get<double>() < 0.5);
    std::string qq = slurp(dir.file("qq.csv"));
    CHECK(qq.rfind("model_q,sample_q\n", 0) == 0);
}

TEST_CASE("gof hand value on a two-point dataset") {
    TempDir dir;
    write(dir.file("spec.json"), R"({"kind":"gh","a":0.0,"b":1.0,"g":0.0,"h":0.0,"c":0.8})");
    write(dir.file("two.csv"), "x\n0\n1\n");
    CHECK(run("gof --input " + dir.file("two.csv") + " --column x --spec " + dir.file("spec.json") +
              " --out " + dir.file("g.json")) == 0);
    auto g = nlohmann::json::parse(slurp(dir.file("g.json")));
    CHECK(g["rmse"].get<double>() == doctest::Approx(0.52957216026098937).epsilon(1e-12));
}

TEST_CASE("non-numeric rows are fatal with the row number unless skipped") {
    TempDir dir;
    write(dir.file("bad.csv"), "x\n1\n2\nbanana\n4\n5\n");
    CHECK(run("lmom --input " + dir.file("bad.csv") + " --column x") == 1);
    CHECK(run("lmom --input " + dir.file("bad.csv") + " --column x --skip-bad-rows") == 0);

    // the error message names file and row
    std::string cmd = std::string(QUANTFAM_CLI_PATH) + " lmom --input " + dir.file("bad.csv") +
                      " --column x 2>" + dir.file("err.txt") + " >/dev/null";
    (void)std::system(cmd.c_str());
    std::string err = slurp(dir.file("err.txt"));
    CHECK(err.find("bad.csv:4") != std::string::npos);
    CHECK(err.find("banana") != std::string::npos);
}

TEST_CASE("usage and I/O failures exit 1") {
    TempDir dir;
    CHECK(run("lmom --input /nonexistent.csv --column x") == 1);
    CHECK(run("unknown-subcommand") == 1);
    CHECK(run("fit --family gh --method molm --input /nonexistent.csv --column x") == 1);
    write(dir.file("short.csv"), "x\n1\n2\n");
    CHECK(run("fit --family gh --method molm --input " + dir.file("short.csv") +
              " --column x") == 1);
    CHECK(run("--help") == 0);
}

TEST_CASE("simulate produces the canonical outputs deterministically") {
    TempDir dir;
    write(dir.file("study.json"), R"({
        "true_spec": {"kind":"gh","a":0,"b":1,"g":0.1,"h":0.1},
        "sample_sizes": [50],
        "replicates": 10,
        "methods": ["molm"],
        "master_seed": 5150,
        "parallelism": 2
    })");
    CHECK(run("simulate --config " + dir.file("study.json") + " --out-prefix " +
              dir.file("run1")) == 0);
    CHECK(run("simulate --config " + dir.file("study.json") + " --out-prefix " +
              dir.file("run2") + " --parallelism 1") == 0);
    CHECK(slurp(dir.file("run1_summary.csv")) == slurp(dir.file("run2_summary.csv")));
    CHECK(slurp(dir.file("run1_summary.json")) == slurp(dir.file("run2_summary.json")));
    CHECK(slurp(dir.file("run1_table.md")).find("| molm | 50 |") != std::string::npos);

    write(dir.file("bad.json"), R"({"replicates": 5})");
    CHECK(run("simulate --config " + dir.file("bad.json") + " --out-prefix " +
              dir.file("x")) == 1);
    write(dir.file("zero.json"), R"({
        "true_spec": {"kind":"gh","a":0,"b":1,"g":0,"h":0},
        "sample_sizes": [50], "replicates": 0, "methods": ["molm"], "master_seed": 1
    })");
    CHECK(run("simulate --config " + dir.file("zero.json") + " --out-prefix " +
              dir.file("y")) == 1);

    // a starved optimizer never converges, so every cell exceeds the 10%
    // failure policy and the exit code is nonzero
    write(dir.file("starved.json"), R"({
        "true_spec": {"kind":"gh","a":0,"b":1,"g":0.1,"h":0.1},
        "sample_sizes": [50], "replicates": 5, "methods": ["molm"], "master_seed": 2,
        "optimizer": {"max_evals": 8, "restarts": 1, "x_tol": 1e-14, "f_tol": 1e-16}
    })");
    CHECK(run("simulate --config " + dir.file("starved.json") + " --out-prefix " +
              dir.file("z")) == 3);
}

TEST_CASE("grouped gof reports one entry per key") {
    TempDir dir;
    std::string csv = "month,amount\n";
    // two groups with distinct locations, enough rows to fit
    for (int i = 0; i < 60; ++i) {
        csv += "jan," + std::to_string(1.0 + 0.1 * ((i * 37) % 60)) + "\n";
        csv += "feb," + std::to_string(5.0 + 0.1 * ((i * 17) % 60)) + "\n";
    }
    write(dir.file("g.csv"), csv);
    write(dir.file("spec.json"), R"({"kind":"gh","a":0,"b":1,"g":0,"h":0})");
    CHECK(run("gof --input " + dir.file("g.csv") + " --column amount --spec " +
              dir.file("spec.json") + " --group-by month --method molm --out " +
              dir.file("groups.json")) == 0);
    auto arr = nlohmann::json::parse(slurp(dir.file("groups.json")));
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["group"] == "feb");
    CHECK(arr[1]["group"] == "jan");
    CHECK(arr[0]["spec"]["a"].get<double>() > arr[1]["spec"]["a"].get<double>());
}
