#pragma once

#include <nlohmann/json.hpp>

#include "dissalpha/bounds.hpp"
#include "dissalpha/graph.hpp"
#include "dissalpha/random_procedure.hpp"
#include "dissalpha/recognizers.hpp"
#include "dissalpha/solvers.hpp"

namespace dissalpha {

// Rationals are emitted as "num/den" strings; nothing here produces a
// floating-point number.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const GraphClass& c);
nlohmann::json to_json(const BoundRecord& b);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const BlockDecomposition& d);
nlohmann::json to_json(const CubicExtremalProfile& p);
nlohmann::json to_json(const DissCertificate& c);
nlohmann::json to_json(const PartitionStats& s);
/// Includes mean and stderr^2 as exact rationals plus the per-vertex hit
/// counts.
nlohmann::json to_json(const MCResult& r);

}  // namespace dissalpha
