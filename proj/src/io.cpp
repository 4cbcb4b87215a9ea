#include "ruzsakit/io.hpp"

#include <fstream>

#include "ruzsakit/errors.hpp"

namespace ruzsakit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const json& array_field(const json& j, const char* key, const std::string& where) {
    const json& a = field(j, key, where);
    if (!a.is_array()) fail(where + "." + key, "expected an array");
    return a;
}

std::size_t positive_size(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1)
        fail(where, "expected a positive integer");
    return j.get<std::size_t>();
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

GroundElement parse_element(const json& j, const std::string& where) {
    if (j.is_number_integer()) return GroundElement{j.get<std::int64_t>()};
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of integers");
    std::vector<std::int64_t> coords;
    coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) fail(where + "[" + std::to_string(i) + "]", "expected an integer");
        coords.push_back(j[i].get<std::int64_t>());
    }
    return GroundElement(std::move(coords));
}

json to_json(const GroundElement& x) { return x.coords; }

std::vector<GroundElement> parse_elements(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    std::vector<GroundElement> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_element(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json to_json(std::span<const GroundElement> xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

Rational parse_rational_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const SchemaError& e) {
        fail(where, e.what());
    }
}

RationalDist parse_dist(const json& j) {
    const json& support = array_field(j, "support", "dist");
    const json& probs = array_field(j, "probs", "dist");
    if (support.size() != probs.size()) fail("dist", "support and probs differ in length");
    std::vector<Rational> ps;
    ps.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i)
        ps.push_back(parse_rational_field(probs[i], "dist.probs[" + std::to_string(i) + "]"));
    try {
        return RationalDist(parse_elements(support, "dist.support"), std::move(ps));
    } catch (const SchemaError& e) {
        fail("dist", e.what());
    }
}

json to_json(const RationalDist& dist) {
    json probs = json::array();
    for (const auto& p : dist.probs()) probs.push_back(p.get_str());
    return {{"support", to_json(std::span<const GroundElement>(dist.support()))}, {"probs", probs}};
}

FiniteMap parse_map(const json& j, std::span<const GroundElement> domain) {
    if (!j.is_object()) fail("map", "expected an object");
    if (j.contains("table")) {
        const json& table = array_field(j, "table", "map");
        std::vector<std::pair<GroundElement, GroundElement>> pairs;
        pairs.reserve(table.size());
        for (std::size_t i = 0; i < table.size(); ++i) {
            const std::string where = "map.table[" + std::to_string(i) + "]";
            if (!table[i].is_array() || table[i].size() != 2) fail(where, "expected a [key, value] pair");
            pairs.emplace_back(parse_element(table[i][0], where + "[0]"),
                               parse_element(table[i][1], where + "[1]"));
        }
        return FiniteMap(std::move(pairs));
    }
    if (j.contains("identity")) return FiniteMap::identity(domain);
    if (j.contains("projection")) {
        const IndexSet S = parse_index_set(j["projection"], "map.projection");
        if (S.empty()) fail("map.projection", "empty index set");
        std::vector<std::pair<GroundElement, GroundElement>> pairs;
        for (const auto& x : domain) pairs.emplace_back(x, project(x, S));
        return FiniteMap(std::move(pairs));
    }
    fail("map", "expected \"table\", \"identity\" or \"projection\"");
}

json to_json(const FiniteMap& f) {
    json table = json::array();
    for (const auto& [key, value] : f.table()) table.push_back({to_json(key), to_json(value)});
    return {{"table", table}};
}

PointSet parse_point_set(const json& j) {
    if (j.is_array()) {
        auto points = parse_elements(j, "points");
        if (points.empty()) fail("points", "empty point set");
        const std::size_t n = points.front().size();
        try {
            return PointSet(n, std::move(points));
        } catch (const SchemaError& e) {
            fail("points", e.what());
        }
    }
    const std::size_t n = positive_size(field(j, "dimension", "point set"), "point set.dimension");
    auto points = parse_elements(array_field(j, "points", "point set"), "point set.points");
    try {
        return PointSet(n, std::move(points));
    } catch (const SchemaError& e) {
        fail("point set", e.what());
    }
}

json to_json(const PointSet& A) {
    return {{"dimension", A.dimension()},
            {"points", to_json(std::span<const GroundElement>(A.points()))}};
}

IndexSet parse_index_set(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of 1-based indices");
    std::vector<std::size_t> idx;
    idx.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        idx.push_back(positive_size(j[i], where + "[" + std::to_string(i) + "]"));
    try {
        return IndexSet(std::move(idx));
    } catch (const IndexError& e) {
        fail(where, e.what());
    }
}

json to_json(const IndexSet& S) { return S.indices(); }

CoverSpec parse_cover(const json& j) {
    const std::size_t n = positive_size(field(j, "n", "cover"), "cover.n");
    const json& members = array_field(j, "members", "cover");
    std::vector<IndexSet> sets;
    sets.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        sets.push_back(parse_index_set(members[i], "cover.members[" + std::to_string(i) + "]"));
    std::optional<std::vector<Rational>> weights;
    if (j.contains("weights")) {
        const json& w = array_field(j, "weights", "cover");
        weights.emplace();
        for (std::size_t i = 0; i < w.size(); ++i)
            weights->push_back(parse_rational_field(w[i], "cover.weights[" + std::to_string(i) + "]"));
    }
    try {
        return CoverSpec(n, std::move(sets), std::move(weights));
    } catch (const Error& e) {
        fail("cover", e.what());
    }
}

json to_json(const CoverSpec& cover) {
    json members = json::array();
    for (const auto& S : cover.members()) members.push_back(to_json(S));
    json j = {{"n", cover.n()}, {"members", members}};
    if (cover.weights()) {
        json w = json::array();
        for (const auto& q : *cover.weights()) w.push_back(q.get_str());
        j["weights"] = w;
    }
    return j;
}

json to_json(const LPSolution& sol) {
    json weights = json::array();
    for (const auto& w : sol.weights) weights.push_back(w.get_str());
    json coverage = json::array();
    for (const auto& c : sol.coverage) coverage.push_back(c.get_str());
    return {{"objective", sol.objective.get_str()}, {"weights", weights}, {"coverage", coverage}};
}

InequalitySpec parse_inequality(const json& j, std::span<const GroundElement> domain) {
    FiniteMap lhs = parse_map(field(j, "lhs_map", "spec"), domain);
    const json& rhs = array_field(j, "rhs_maps", "spec");
    const json& coeffs = array_field(j, "coefficients", "spec");
    std::vector<FiniteMap> maps;
    maps.reserve(rhs.size());
    for (const auto& m : rhs) maps.push_back(parse_map(m, domain));
    std::vector<Rational> alphas;
    alphas.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        alphas.push_back(parse_rational_field(coeffs[i], "spec.coefficients[" + std::to_string(i) + "]"));
    return InequalitySpec(std::move(lhs), std::move(maps), std::move(alphas));
}

}  // namespace ruzsakit::io
