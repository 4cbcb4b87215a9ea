#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruzsakit/checkers.hpp"
#include "ruzsakit/core_dist.hpp"
#include "ruzsakit/covers.hpp"
#include "ruzsakit/projections.hpp"

// JSON interchange. Rationals and big integers travel as strings ("1/6",
// "60"); coordinate tuples as integer arrays. Every parser throws SchemaError
// naming the offending field.
namespace ruzsakit::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);

GroundElement parse_element(const json& j, const std::string& where = "element");
json to_json(const GroundElement& x);
std::vector<GroundElement> parse_elements(const json& j, const std::string& where);
json to_json(std::span<const GroundElement> xs);

Rational parse_rational_field(const json& j, const std::string& where);

// {"support": [[1],[2]], "probs": ["1/2","1/2"]}
RationalDist parse_dist(const json& j);
json to_json(const RationalDist& dist);

// {"table": [[[1],[0]], [[2],[1]]]}, or the symbolic forms
// {"identity": true} and {"projection": [1,3]}, which are materialized over
// `domain`.
FiniteMap parse_map(const json& j, std::span<const GroundElement> domain = {});
json to_json(const FiniteMap& f);

// {"dimension": 2, "points": [[0,0],[0,1]]}, or a bare array of points.
PointSet parse_point_set(const json& j);
json to_json(const PointSet& A);

// 1-based sorted arrays, e.g. [1,3].
IndexSet parse_index_set(const json& j, const std::string& where = "index set");
json to_json(const IndexSet& S);

// {"n": 3, "members": [[1,2],[1,3],[2,3]], "weights": ["1/2","1/2","1/2"]}
CoverSpec parse_cover(const json& j);
json to_json(const CoverSpec& cover);

json to_json(const LPSolution& sol);

// {"lhs_map": <map>, "rhs_maps": [<map>, ...], "coefficients": ["1","1"]}
InequalitySpec parse_inequality(const json& j, std::span<const GroundElement> domain);

}  // namespace ruzsakit::io
