#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "vknot/census.hpp"
#include "vknot/hom_count.hpp"
#include "vknot/quandle.hpp"

using namespace vknot;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run_cli(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::filesystem::temp_directory_path() / name;
        if (!content.empty()) {
            std::ofstream f(path);
            f << content;
        }
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("invariant prints the counting pair and difference") {
    const auto r = run({"invariant", "--code", "O1+U2+O3+U1+O2+U3+", "--quandle", "T3"});
    CHECK(r.status == 0);
    CHECK(r.out == "upper=9 lower=9 qd=0\n");
    CHECK(r.err.empty());
}

TEST_CASE("invariant json matches the library report") {
    const auto r = run({"invariant", "--code", "O1+U1+", "--quandle", "T4", "--json"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"upper\":4,\"lower\":4,\"qd\":0,\"trivialUpper\":true,\"trivialLower\":true}\n");
}

TEST_CASE("invariant accepts codes from files") {
    TempFile code_file("vknot_test_code.txt", "O1+U2+O3+U1+O2+U3+\n");
    const auto r =
        run({"invariant", "--code", "@" + code_file.path.string(), "--quandle", "T3"});
    CHECK(r.status == 0);
    CHECK(r.out == "upper=9 lower=9 qd=0\n");
}

TEST_CASE("code check prints the reference line") {
    const auto r = run({"code", "check", "UA+OB-UC+OD+OA+UB-UD+OC+"});
    CHECK(r.status == 0);
    CHECK(r.out == "valid; not evenly intersticed; r1:no; r2:no\n");

    const auto kink = run({"code", "check", "O1+U1+"});
    CHECK(kink.out == "valid; evenly intersticed; r1:yes; r2:no\n");
}

TEST_CASE("code parse normalizes and converts notation") {
    const auto text = run({"code", "parse", "UA+OB-UC+OD+OA+UB-UD+OC+"});
    CHECK(text.status == 0);
    CHECK(text.out == "U1+O2-U3+O4+O1+U2-U4+O3+\n");

    const auto vec = run({"code", "parse", "UA+OB-UC+OD+OA+UB-UD+OC+", "--vector"});
    CHECK(vec.out == "[-1,2+I,-3,4,1,-2-I,-4,3,0]\n");

    const auto back = run({"code", "parse", "[-1,2+I,-3,4,1,-2-I,-4,3,0]"});
    CHECK(back.out == "U1+O2-U3+O4+O1+U2-U4+O3+\n");
}

TEST_CASE("code flip matches the library") {
    const auto r = run({"code", "flip", "UA+OB-UC+OD+OA+UB-UD+OC+", "--vector"});
    CHECK(r.status == 0);
    CHECK(r.out == "[-1,2+I,4,-3,1,-2-I,3,-4,0]\n");
}

TEST_CASE("code presentation prints relations and matrices") {
    const auto rel = run({"code", "presentation", "UA+OB-UC+OD+OA+UB-UD+OC+"});
    CHECK(rel.status == 0);
    CHECK(rel.out ==
          "generators: 4\n"
          "x1 > x3 = x2\n"
          "x2 > x1 = x3\n"
          "x4 > x2 = x3\n"
          "x4 > x3 = x1\n");

    const auto matrix =
        run({"code", "presentation", "UA+OB-UC+OD+OA+UB-UD+OC+", "--matrix"});
    CHECK(matrix.out == "0 0 2 0\n3 0 0 0\n0 0 0 0\n0 3 1 0\n");

    const auto conflict =
        run({"code", "presentation", "UA+OB-UC+OD+OA+UB-UD+OC+", "--side", "lower", "--matrix"});
    CHECK(conflict.status == 0);
    CHECK(conflict.out == "conflict at (4,2): 3 vs 1\n");

    const auto fixed = run({"code", "presentation", "UA+OB-UC+OD+OA+UB-UD+OC+", "--side", "lower",
                            "--matrix", "--gfix"});
    CHECK(fixed.out == "0 0 2 0 0\n0 0 0 0 3\n0 0 0 0 0\n0 3 0 5 0\n0 1 0 0 0\n");
}

TEST_CASE("quandle verify reports validity and connectedness") {
    TempFile good("vknot_test_t4.txt", serialize_table(builtin("T4")));
    const auto ok = run({"quandle", "verify", good.path.string()});
    CHECK(ok.status == 0);
    CHECK(ok.out == "valid, connected\n");

    TempFile trivial("vknot_test_trivial.txt", serialize_table(builtin("T3-trivial")));
    const auto not_connected = run({"quandle", "verify", trivial.path.string()});
    CHECK(not_connected.status == 0);
    CHECK(not_connected.out == "valid, not connected\n");

    TempFile bad("vknot_test_bad.txt", "1 2\n1 2");
    const auto invalid = run({"quandle", "verify", bad.path.string()});
    CHECK(invalid.status == 1);
    CHECK(invalid.out == "invalid: axiom ii fails in column 1 (value 1 repeats)\n");

    const auto missing = run({"quandle", "verify", "/nonexistent/path"});
    CHECK(missing.status == 1);
    CHECK(missing.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("quandle show and list") {
    const auto show = run({"quandle", "show", "T3"});
    CHECK(show.out == "1 3 2\n3 2 1\n2 1 3\n");

    const auto list = run({"quandle", "list"});
    CHECK(list.out == "T3\nT4\nT5a\nT5b\nT5c\nT6\n");

    const auto unknown = run({"quandle", "show", "T9"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("unknown quandle name") != std::string::npos);
}

TEST_CASE("census subcommand matches the library and writes exports") {
    TempFile csv("vknot_test_census.csv");
    TempFile json("vknot_test_census.json");
    const auto r = run({"census", "--crossings", "3", "--quandles", "T3,T4", "--csv",
                        csv.path.string(), "--json", json.path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("total codes: 172\n") != std::string::npos);
    CHECK(r.out.find("detected T3: 0\n") != std::string::npos);

    CensusConfig cfg;
    cfg.crossings = 3;
    cfg.quandles = {{"T3", builtin("T3")}, {"T4", builtin("T4")}};
    const CensusResult expected = run_census(cfg);

    std::ifstream csv_in(csv.path);
    std::stringstream csv_text;
    csv_text << csv_in.rdbuf();
    CHECK(csv_text.str() == export_csv(expected));

    std::ifstream json_in(json.path);
    std::stringstream json_text;
    json_text << json_in.rdbuf();
    CHECK(census_from_json(json_text.str()) == expected);
}

TEST_CASE("table1 runs the four-crossing census over the six builtins") {
    const auto r = run({"table1", "--jobs", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("crossings: 4\n") != std::string::npos);
    CHECK(r.out.find("total codes: 4448\n") != std::string::npos);
    CHECK(r.out.find("detected T3: ") != std::string::npos);
    CHECK(r.out.find("detected T6: ") != std::string::npos);
}

TEST_CASE("usage errors exit with status two") {
    const auto nocmd = run({});
    CHECK(nocmd.status == 2);

    const auto badflag = run({"invariant", "--bogus", "x"});
    CHECK(badflag.status == 2);
    CHECK_FALSE(badflag.err.empty());

    const auto badsub = run({"code", "frobnicate", "O1+U1+"});
    CHECK(badsub.status == 2);
}

TEST_CASE("domain errors exit with status one") {
    const auto badcode = run({"code", "check", "O1+U2+"});
    CHECK(badcode.status == 1);
    CHECK_FALSE(badcode.err.empty());

    const auto badquandle = run({"invariant", "--code", "O1+U1+", "--quandle", "Tnope"});
    CHECK(badquandle.status == 1);
}

TEST_CASE("help is a success") {
    const auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("vknot") != std::string::npos);
}
