#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dw/cli.hpp"
#include "dw/report.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "dw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = dw::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("compute emits a passing report") {
    const auto r = run({"compute", "--group", "symmetric:3", "--surface", "orientable:1", "--method", "all", "--oracle"});
    REQUIRE(r.code == 0);
    const auto j = dw::Json::parse(r.out);
    CHECK(j["group"] == "symmetric:3");
    CHECK(j["integrality"]["nearest_integer"] == 3);
    CHECK(j["passed"] == true);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"compute", "--group", "product(cyclic:3,cyclic:3)", "--cocycle", "heisenberg:3",
                                        "--surface", "orientable:2", "--method", "all", "--workers", "3"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto d1 = run({"decompose", "--group", "quaternion:8", "--seed", "5"});
    const auto d2 = run({"decompose", "--group", "quaternion:8", "--seed", "5"});
    CHECK(d1.code == 0);
    CHECK(d1.out == d2.out);
}

TEST_CASE("csv output") {
    const auto r = run({"compute", "--group", "cyclic:2", "--cocycle", "sign:1", "--surface", "nonorientable:2", "--csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row, extra;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == dw::report_csv_header());
    CHECK(row.find("nonorientable:2") != std::string::npos);
    CHECK_FALSE(std::getline(lines, extra));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"compute", "--group", "symmetric:5", "--surface", "orientable:1"}).code == 2);
    CHECK(run({"compute", "--group", "cyclic:3", "--surface", "torus"}).code == 2);
    CHECK(run({"compute", "--group", "cyclic:3", "--cocycle", "bogus", "--surface", "orientable:1"}).code == 2);
    CHECK(run({"compute", "--group", "cyclic:3", "--surface", "orientable:1", "--method", "magic"}).code == 2);
    CHECK(run({"check", "--suite", "nonsense"}).code == 2);
    CHECK(run({"statesum", "--group", "cyclic:3", "--tri", "standard"}).code == 2);
    CHECK(run({"check", "--config", "/nonexistent/suite.json"}).code == 2);
}

TEST_CASE("computational failures exit with 1") {
    const auto r = run({"compute", "--group", "product(cyclic:3,cyclic:3)", "--cocycle", "heisenberg:3", "--surface", "nonorientable:1"});
    CHECK(r.code == 1);
    CHECK(dw::Json::parse(r.out).contains("error"));
    CHECK(run({"statesum", "--group", "cyclic:3", "--cocycle", "heisenberg:3", "--surface", "orientable:1"}).code == 2);
}

TEST_CASE("state sum on a file triangulation") {
    const auto exported = run({"triangulation", "--surface", "orientable:1", "--moves", "6", "--seed", "3"});
    REQUIRE(exported.code == 0);
    const auto path = temp_file("dw_cli_tri.json", exported.out);
    const auto r = run({"statesum", "--group", "symmetric:3", "--tri", "file:" + path.string()});
    REQUIRE(r.code == 0);
    const auto j = dw::Json::parse(r.out);
    CHECK(j["surface"] == "orientable:1");
    CHECK(run({"statesum", "--group", "symmetric:3", "--surface", "orientable:2", "--tri", "file:" + path.string()}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("suite configs") {
    const auto path = temp_file("dw_cli_suite.json", R"json({"entries": [
        {"group": "symmetric:3", "surface": "orientable:2", "methods": ["direct", "statesum", "verlinde"]},
        {"group": "product(cyclic:2,cyclic:2)", "cocycle": "sign:3", "surface": "nonorientable:3", "methods": ["direct", "verlinde"], "tolerance": 1e-9}
    ]})json");
    const auto r = run({"check", "--config", path.string(), "--json"});
    CHECK(r.code == 0);
    const auto j = dw::Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["reports"].size() == 2);
    const auto bad = temp_file("dw_cli_bad.json", R"json({"entries": [{"group": "cyclic:2"}]})json");
    CHECK(run({"check", "--config", bad.string()}).code == 2);
    const auto unknown = temp_file("dw_cli_unknown.json", R"json({"entries": [{"group": "cyclic:99", "surface": "orientable:1"}]})json");
    CHECK(run({"check", "--config", unknown.string()}).code == 2);
    std::filesystem::remove(unknown);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("invariance suite passes") {
    const auto r = run({"check", "--suite", "invariance", "--json"});
    CHECK(r.code == 0);
    CHECK(dw::Json::parse(r.out)["passed"] == true);
}
