#pragma once

#include <string>

#include <json.hpp>

#include "torext/criteria.hpp"
#include "torext/mapping_class.hpp"
#include "torext/surface_model.hpp"

namespace torext {

using json = nlohmann::json;

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings. Both forms are accepted on input.
json to_json(const Integer& x);
Integer integer_from_json(const json& j, const std::string& field);

json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, const std::string& field);

// {"q_genus": int, "components": [{"genus": int, "boundary_count": int}, ...]}
json to_json(const SubsurfaceConfig& config);
SubsurfaceConfig config_from_json(const json& j);

// {"factors": [{"class": [int, ...], "exponent": int, "locus": "Q" | {"P": j} | "S"}]}
json to_json(const TwistWord& word);
TwistWord word_from_json(const json& j);

// {"matrix": [[...]], "block_ranges": {"j": [begin, end)}}
json to_json(const DifferenceMap& delta);
// Accepts {"blocks": {"j": [[...]]}} with per-component matrix presentations
// (absent components are zero), or {"matrix": [[...]]} with the full map.
DifferenceMap delta_from_json(const HomologyModel& model, const json& j);

json to_json(const DiagonalMap& d);
json to_json(const GroupRanks& ranks);
json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

// Throws ParseError naming the file.
json read_json_file(const std::string& path);

}  // namespace torext
