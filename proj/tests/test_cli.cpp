#include "picalb/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace picalb;

namespace {

struct Outcome {
    int status = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("picalb_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("documented outputs") {
    auto g = run({"gamma", "2"});
    CHECK(g.status == 0);
    CHECK(g.out == "{\"alpha\":2,\"abelian\":0,\"torus\":0,\"unipotent\":6,\"total\":6}\n");

    auto s = run({"semigroup", "2", "7"});
    CHECK(s.status == 0);
    CHECK(s.out == "{\"gaps\":[1,3,5],\"conductor\":6}\n");

    auto y = run({"gysin", "1", "1"});
    CHECK(y.status == 0);
    CHECK(y.out ==
          "{\"alpha\":1,\"beta\":1,\"N_low\":\"1/2\",\"N_suff\":\"1/3\",\"N0\":1,\"N1\":1,\"exact\":true,"
          "\"esv_bound\":\"7/3\"}\n");
}

TEST_CASE("ranges") {
    auto g = run({"gysin", "--range", "3"});
    REQUIRE(g.status == 0);
    const auto rows = Json::parse(g.out);
    REQUIRE(rows.size() == 3);
    std::vector<int> n0, n1;
    for (const auto& r : rows) {
        n0.push_back(r["N0"]);
        n1.push_back(r["N1"]);
    }
    CHECK(n0 == std::vector<int>{1, 1, 2});
    CHECK(n1 == n0);

    auto one = run({"gamma", "--range", "1"});
    REQUIRE(one.status == 0);
    CHECK(Json::parse(one.out).size() == 1);
    CHECK(Json::parse(one.out)[0]["total"] == 1);

    auto empty = run({"gamma", "--range", "0"});
    CHECK(empty.status == 0);
    CHECK(empty.out == "[]\n");

    auto too_far = run({"gysin", "--range", "13"});
    CHECK(too_far.status == 2);
    CHECK(run({"gysin", "--range", "13", "--max-range", "20"}).status == 0);
}

TEST_CASE("table output mirrors the JSON rows") {
    auto t = run({"gysin", "--range", "2", "--format", "table"});
    REQUIRE(t.status == 0);
    std::istringstream lines(t.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.find("N_low") != std::string::npos);
    CHECK(header.find("esv_bound") != std::string::npos);
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 3);  // rule + 2 rows
}

TEST_CASE("validation errors exit with status 2 and a JSON diagnostic") {
    auto s = run({"semigroup", "4", "6"});
    CHECK(s.status == 2);
    CHECK(s.out.empty());
    const auto diag = Json::parse(s.err);
    CHECK(diag["error"] == "NON_COFINITE");
    CHECK(diag.contains("detail"));

    CHECK(Json::parse(run({"gamma", "0"}).err)["error"] == "USAGE");
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"gamma"}).status == 2);
    CHECK(run({"gamma", "2", "--range", "3"}).status == 2);
    CHECK(run({"picard", "/nonexistent/model.json"}).status == 2);
    CHECK(Json::parse(run({"picard", write_temp("bad.json", "{not json")}).err)["error"] == "SCHEMA");
}

TEST_CASE("picard and local subcommands") {
    const auto model = write_temp("model.json", R"({
      "components": [{"id": "A", "genus": 0}],
      "points": [{"label": "n", "class": "ordinary-2", "incidence": ["A", "A"]},
                 {"label": "c", "branches": [[["0","0","1"],["0","0","0","1"]]], "incidence": ["A"]}],
      "connected": true})");
    auto p = run({"picard", model});
    REQUIRE(p.status == 0);
    const auto j = Json::parse(p.out);
    CHECK(j["abelian"] == 0);
    CHECK(j["torus"] == 1);
    CHECK(j["unipotent"] == 1);
    CHECK(j["total"] == 2);
    CHECK(j["points"][1]["method"] == "semigroup");
    CHECK(Json::parse(run({"picard", model, "--method", "jets"}).out)["points"][1]["method"] == "jets");

    const auto disconnected = write_temp("disc.json", R"({
      "components": [{"id": "A", "genus": 0}, {"id": "B", "genus": 0}], "points": [], "connected": true})");
    CHECK(Json::parse(run({"picard", disconnected}).err)["error"] == "DISCONNECTED");

    const auto point = write_temp("point.json", R"({"label": "c35", "branches": [[["0","0","0","1"],["0","0","0","0","0","1"]]]})");
    auto l = run({"local", point});
    REQUIRE(l.status == 0);
    CHECK(Json::parse(l.out)["unipotent"] == 4);
    auto lj = run({"local", point, "--truncation", "12"});
    REQUIRE(lj.status == 0);
    CHECK(Json::parse(lj.out)["method"] == "jets");
    CHECK(Json::parse(lj.out)["stable"] == true);
    CHECK(Json::parse(lj.out)["profile"]["pole_orders"] == Json::array({1, 2, 4, 7}));
    auto unstable = run({"local", point, "--truncation", "4"});
    CHECK(unstable.status == 2);
    CHECK(Json::parse(unstable.err)["error"] == "UNSTABLE_TRUNCATION");
}

TEST_CASE("dkl and product") {
    auto d = run({"dkl", "1", "1", "2", "2"});
    REQUIRE(d.status == 0);
    CHECK(d.out == "{\"alpha\":1,\"beta\":1,\"k\":2,\"l\":2,\"abelian\":0,\"torus\":1,\"unipotent\":4,\"total\":5}\n");
    auto p = run({"product", "2", "1"});
    REQUIRE(p.status == 0);
    const auto j = Json::parse(p.out);
    CHECK(j["dimension"] == 13);
    CHECK(j["theta_size"] == 13);
    CHECK(j["rulings"]["q=0"]["dims"] == Json::array({7}));
}

TEST_CASE("oracle is deterministic for a seed") {
    auto a = run({"oracle", "--trials", "25", "--seed", "42"});
    auto b = run({"oracle", "--trials", "25", "--seed", "42"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    const auto j = Json::parse(a.out);
    CHECK(j["agreements"] == 25);
    CHECK(j["cases"].size() == 25);
    CHECK(run({"oracle", "--trials", "5", "--seed", "43"}).out != run({"oracle", "--trials", "5", "--seed", "42"}).out);
}

TEST_CASE("outputs are deterministic and re-parse") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"gamma", "--range", "4", "--detail"},
                                                                 {"gysin", "--range", "5"},
                                                                 {"dkl", "2", "1", "3", "3", "--detail"},
                                                                 {"product", "3", "2"}}) {
        const auto first = run(args), second = run(args);
        REQUIRE(first.status == 0);
        CHECK(first.out == second.out);
        CHECK(Json::parse(first.out).dump() + "\n" == first.out);
    }
}
