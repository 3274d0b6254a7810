#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "dissalpha/gadgets.hpp"

namespace dissalpha {

/// JSON shape:
///   {"n": 6, "k": 1,
///    "edges": [{"id": 0, "u": 0, "v": 2}, ...],   ids must be 0..m-1
///    "M": [8],
///    "orientation": [{"edge": 0, "head": 0}, ...], optional; found by flow if absent
///    "leaf_variants": [{"vertex": 0, "variant": "LEAF9_B"}]}   optional
/// Throws std::invalid_argument on malformed input. The result is not
/// validated; call validate_witness.
HWitness witness_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const HWitness& w);

HWitness load_witness(const std::filesystem::path& path);

}  // namespace dissalpha
