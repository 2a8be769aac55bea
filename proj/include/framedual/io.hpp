#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "framedual/duality.hpp"

namespace framedual::io {

using nlohmann::json;

// Window: {"L": n, "re": [...], "im": [...]}
json window_to_json(const ComplexVector& w);
ComplexVector window_from_json(const json& j);  // ParseError

// Vector system: {"dim": d, "vectors": [{"re": [...], "im": [...]}, ...]}
json system_to_json(const VectorSystem& sys);
VectorSystem system_from_json(const json& j);  // ParseError

// Group with multiplier: {"order": n, "mul": [[...]], "mu_re": [[...]],
// "mu_im": [[...]]}; validated on load. ParseError / InvalidGroup / cocycle errors.
json group_to_json(const FiniteGroup& group, const Multiplier& mu);
std::pair<FiniteGroup, Multiplier> group_from_json(const json& j);

json frame_report_to_json(const FrameReport& r);
json verdict_to_json(const DualityVerdict& v);

// Lattice spec string: "L=6; gens=(2,0),(0,3)"; the "L=" clause may be
// omitted when L is supplied separately (0 means not supplied). Errors:
// ParseError on malformed input or conflicting L values.
ZLattice parse_lattice_spec(const std::string& spec, int fallback_L = 0);

json load_json_file(const std::string& path);              // ParseError
void write_json(const json& j, const std::string& path);   // stdout when path empty

}  // namespace framedual::io
