#pragma once

#include "picalb/local_singularity.hpp"
#include "picalb/picard.hpp"

#include <json.hpp>

namespace picalb {

using Json = nlohmann::ordered_json;

/// Curve-model JSON:
///
///   { "components": [{"id": "A", "genus": 0}, ...],
///     "points": [ {"label": "p", "class": "param",
///                  "branches": [[["0","0","1"], ["0","0","0","1"]]],
///                  "incidence": ["A"], "truncation": 12},
///                 {"label": "n", "class": "ordinary-2", "incidence": ["A", "A"]},
///                 {"label": "g", "class": "general", "branch_count": 1,
///                  "unipotent": 3, "incidence": ["A"]} ],
///     "connected": true }
///
/// A branch is a list of coordinates; a coordinate is a list of rational
/// strings "p/q", entry i being the coefficient of t^i. "class" defaults to
/// "param" when "branches" is present; "truncation" is optional.
/// All parse functions throw Error(Schema) on violations.
CurveModel parse_curve_model(const Json& doc);
Json to_json(const CurveModel& model);

/// A single point: {"label": ..., "branches": [...]}.
SingularPointData parse_point(const Json& doc);
Json to_json(const SingularPointData& point);

Json to_json(const ValuationProfile& profile);
Json to_json(const PicardDecomposition& d);

}  // namespace picalb
