#pragma once

#include "hstar/classify.hpp"
#include "hstar/deltaprops.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/families.hpp"
#include "hstar/polytope.hpp"

#include <json.hpp>

#include <string>

namespace hstar::io {

using OrderedJson = nlohmann::ordered_json;

/// Shared vertex-file format: { "ambient_dim": N, "vertices": [[...], ...],
/// "name": optional string }. Coordinates must be exact integer literals;
/// any fractional literal is rejected. Unknown keys are ignored on read.
OrderedJson polytope_to_json(const poly::LatticePolytope& p);
poly::LatticePolytope polytope_from_json(const nlohmann::json& doc);
poly::LatticePolytope read_polytope_file(const std::string& path);

OrderedJson delta_to_json(const ehrhart::DeltaVector& d);
OrderedJson family_to_json(const fam::FamilyInstance& inst);
OrderedJson realization_to_json(const classify::RealizationResult& r);
OrderedJson classification_to_json(const classify::ClassificationReport& rep);

IntVec intvec_from_json(const nlohmann::json& arr);

} // namespace hstar::io
