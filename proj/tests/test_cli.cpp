#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "linhyp/cli.hpp"
#include "linhyp/family_json.hpp"
#include "linhyp/generators.hpp"
#include "linhyp/matching.hpp"
#include "support.hpp"

using namespace linhyp;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("linhyp_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("gen writes the promised families") {
    const auto path = temp_path("sunflower.json");
    auto r = run({"gen", "sunflower", "--delta", "4", "--nu", "3", "--out", path});
    CHECK(r.code == 0);
    const auto f = read_family_file(path);
    CHECK(f.size() == 12);

    r = run({"gen", "steiner", "--n", "7"});
    CHECK(r.code == 0);
    const auto s = family_from_json(r.out.substr(0, r.out.find('\n')));
    CHECK(s.size() == 7);
    CHECK(canonical_form(s) == canonical_form(fano_plane()));

    r = run({"gen", "graph-lift", "--delta", "3", "--nu", "2"});
    CHECK(r.code == 0);
    CHECK(family_from_json(r.out.substr(0, r.out.find('\n'))).size() == 7);

    r = run({"gen", "extremal-graph", "--delta", "4", "--nu", "2"});
    CHECK(r.code == 0);
    CHECK(family_from_json(r.out.substr(0, r.out.find('\n'))).uniformity() == 2u);

    const auto a = run({"gen", "random", "--n", "9", "--edges", "12", "--seed", "1"});
    const auto b = run({"gen", "random", "--n", "9", "--edges", "12", "--seed", "1"});
    CHECK(a.out == b.out);
}

TEST_CASE("gen rejects invalid parameters") {
    CHECK(run({"gen", "steiner", "--n", "8"}).code == 2);
    CHECK(run({"gen", "sunflower", "--delta", "0", "--nu", "2"}).code == 2);
    CHECK(run({"gen", "unknown"}).code == 2);
    CHECK(run({"gen", "sunflower", "--bogus", "1"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("round trip: gen then analyze") {
    struct Case {
        std::vector<std::string> gen;
        std::size_t delta, nu, edges;
    };
    const std::vector<Case> cases{
        {{"sunflower", "--delta", "4", "--nu", "3"}, 4, 3, 12},
        {{"sunflower", "--delta", "1", "--nu", "1"}, 1, 1, 1},
        {{"steiner", "--n", "7"}, 3, 1, 7},
        {{"steiner", "--n", "9"}, 4, 3, 12},
        {{"graph-lift", "--delta", "3", "--nu", "2"}, 3, 2, 7},
        {{"graph-lift", "--delta", "4", "--nu", "3"}, 4, 3, 14},
        {{"extremal-graph", "--delta", "5", "--nu", "3"}, 5, 3, 17},
    };
    for (const auto& c : cases) {
        std::vector<std::string> args{"gen"};
        args.insert(args.end(), c.gen.begin(), c.gen.end());
        const auto path = temp_path("roundtrip.json");
        args.push_back("--out");
        args.push_back(path);
        REQUIRE(run(args).code == 0);
        const auto r = run({"analyze", path, "--json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["max_degree"] == c.delta);
        CHECK(j["nu"] == c.nu);
        CHECK(j["edges"] == c.edges);
    }
}

TEST_CASE("analyze") {
    const auto empty = write_temp("empty.json", R"({"k": 3, "n": 0, "edges": []})");
    auto r = run({"analyze", empty, "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["nu"] == 0);
    CHECK(j["max_degree"] == 0);
    CHECK(j["k1"] == 0);

    const auto sf = temp_path("sf42.json");
    run({"gen", "sunflower", "--delta", "4", "--nu", "2", "--out", sf});
    j = nlohmann::json::parse(run({"analyze", sf, "--json"}).out);
    CHECK(j["s_f"] == std::vector<int>{0, 9});
    CHECK(j["nu"] == 2);

    r = run({"analyze", sf});
    CHECK(r.out.find("nu           2") != std::string::npos);
    CHECK(run({"analyze", temp_path("does_not_exist.json")}).code == 2);
}

TEST_CASE("verify exit codes") {
    const auto sf = temp_path("sf162.json");
    run({"gen", "sunflower", "--delta", "16", "--nu", "2", "--out", sf});
    auto r = run({"verify", sf});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool main_tight = false;
    for (const auto& rec : j["records"])
        if (rec["id"] == "main_delta_nu") main_tight = rec["verdict"] == "tight";
    CHECK(main_tight);

    const auto fano = temp_path("fano.json");
    std::ofstream(fano) << to_json(fano_plane());
    r = run({"verify", fano, "--quiet"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["records"][0]["id"] == "trivial_cover");
    CHECK(j["records"][0]["verdict"] == "tight");
    // the literal E3 bound fails on the Fano plane
    CHECK(r.code == 1);
    CHECK(r.err.empty());

    const auto truncated = write_temp("truncated.json", R"({"k": 3, "n": 7, "edges": [[0,1,2])");
    CHECK(run({"verify", truncated}).code == 2);
    const auto unsorted = write_temp("unsorted.json", R"({"k": 3, "n": 7, "edges": [[0,2,1]]})");
    CHECK(run({"verify", unsorted}).code == 2);
    CHECK(run({"verify", unsorted, "--lenient"}).code == 0);
}

TEST_CASE("verify csv") {
    const auto sf = temp_path("sf31.json");
    run({"gen", "sunflower", "--delta", "3", "--nu", "1", "--out", sf});
    const auto out = temp_path("sf31.csv");
    CHECK(run({"verify", sf, "--csv", "--out", out}).code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "family-hash,bound-id,applicable,left,right,slack,verdict");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 21);
}

TEST_CASE("sweep command") {
    auto r = run({"sweep", "--max-vertices", "3", "--max-edges", "1", "--quiet"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["families"] == 2);
    // the literal E3 bound fails on the triangle inside (6, 3)
    r = run({"sweep", "--max-vertices", "6", "--max-edges", "3", "--quiet"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["families"] == 5);
    CHECK(j["stats"]["e3_bound"]["violated"] == 1);
    CHECK(run({"sweep", "--max-vertices", "6"}).code == 2);
    CHECK(run({"sweep", "--max-vertices", "6", "--max-edges", "3", "--jobs", "0"}).code == 2);
}

TEST_CASE("check-config command") {
    auto r = run({"check-config", "--prop", "d2ab-unique"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 surviving class\n") != std::string::npos);
    r = run({"check-config", "--prop", "remark777", "--budget", "1000", "--quiet"});
    CHECK(r.code == 3);
    CHECK(r.out.find("frontier") != std::string::npos);
    CHECK(run({"check-config", "--prop", "nothing"}).code == 2);
}
