#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ruzsakit/cli.hpp"
#include "ruzsakit/errors.hpp"
#include "ruzsakit/io.hpp"

using namespace ruzsakit;
using nlohmann::json;

namespace {

std::filesystem::path scratch() {
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / "ruzsakit_unit";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string put(const std::string& name, const std::string& body) {
    const auto p = scratch() / name;
    std::ofstream(p) << body;
    return p.string();
}

struct Result {
    int code;
    json doc;
    std::string text;
};

Result cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    json doc;
    try {
        doc = json::parse(out.str());
    } catch (const json::parse_error&) {
    }
    return {code, doc, out.str()};
}

}  // namespace

TEST_CASE("round trips are canonical") {
    const json dist = json::parse(R"({"support": [[0,1],[1,0]], "probs": ["1/3","2/3"]})");
    CHECK(io::to_json(io::parse_dist(dist)) == dist);

    const json cover = json::parse(R"({"n": 3, "members": [[1,2],[1,3],[2,3]], "weights": ["1/2","1/2","1/2"]})");
    CHECK(io::to_json(io::parse_cover(cover)) == cover);

    const json set = json::parse(R"({"dimension": 2, "points": [[0,0],[0,1],[1,0]]})");
    CHECK(io::to_json(io::parse_point_set(set)) == set);

    const json map = json::parse(R"({"table": [[[0],[1]],[[1],[1]]]})");
    CHECK(io::to_json(io::parse_map(map, {})) == map);
}

TEST_CASE("schema errors carry a field path") {
    const json bad = json::parse(R"({"support": [[0],[1]], "probs": ["1/2", 0.5]})");
    try {
        io::parse_dist(bad);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("dist.probs[1]") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_cover(json::parse(R"({"n": 2, "members": [[0]]})")), SchemaError);
    CHECK_THROWS_AS(io::parse_point_set(json::parse(R"([])")), SchemaError);
}

TEST_CASE("cli examples") {
    const auto two = put("two.json", R"({"support": [[0],[1]], "probs": ["1/2","1/2"]})");
    auto r = cli_run({"entropy", "--dist", two});
    CHECK(r.code == cli::kHolds);
    CHECK(r.doc["entropy"] == 1.0);

    r = cli_run({"ruzsa", "size", "--dist", two, "--k", "4"});
    CHECK(r.doc["size"] == "6");

    const auto tri = put("tri.json", R"({"n": 3, "members": [[1,2],[1,3],[2,3]]})");
    r = cli_run({"cover", "min", "--cover", tri});
    CHECK(r.code == cli::kHolds);
    CHECK(r.doc["objective"] == "3/2");
}

TEST_CASE("cli exit codes") {
    const auto set = put("L.json", R"([[0,0],[0,1],[1,0]])");
    const auto spec = put("half.json",
                          R"({"lhs_map": {"identity": true}, "rhs_maps": [{"projection": [1]}], "coefficients": ["1/2"]})");
    auto r = cli_run({"check", "cardinality", "--spec", spec, "--input", set});
    CHECK(r.code == cli::kViolated);
    CHECK(r.doc["verdict"] == "violated");

    const auto broken = put("broken.json", R"({"support": [[0]], "probs": ["1/2"]})");
    r = cli_run({"entropy", "--dist", broken});
    CHECK(r.code == cli::kInputError);
    CHECK(r.doc["error"]["kind"] == "SchemaError");

    r = cli_run({"entropy", "--dist", (scratch() / "missing.json").string()});
    CHECK(r.code == cli::kInputError);

    r = cli_run({"nosuchcommand"});
    CHECK(r.code == cli::kInputError);

    const auto thin = put("thin.json", R"({"n": 2, "members": [[1]]})");
    r = cli_run({"cover", "min", "--cover", thin});
    CHECK(r.code == cli::kInputError);
    CHECK(r.doc["error"]["kind"] == "InfeasibleError");
}

TEST_CASE("demo") {
    const EvalOptions opts;
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const json doc = cli::demo_equivalence(seed, false, opts);
        CHECK(doc["all_hold"] == true);
        CHECK(doc == cli::demo_equivalence(seed, false, opts));
    }
    for (std::uint64_t seed : {1, 7, 8}) {
        const json doc = cli::demo_equivalence(seed, true, opts);
        CHECK(doc["all_hold"] == true);
        CHECK(std::abs(doc["loomis_whitney"]["slack"].get<double>()) <= 1e-9);
        CHECK(std::abs(doc["han"]["slack"].get<double>()) <= 1e-9);
    }
    const auto a = cli_run({"--seed", "42", "demo"});
    const auto b = cli_run({"--seed", "42", "demo"});
    CHECK(a.code == cli::kHolds);
    CHECK(a.text == b.text);
    CHECK(!cli::render_table(a.doc).empty());
}
