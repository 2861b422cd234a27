#pragma once

#include <json.hpp>
#include <string>

#include "affinv/constructor.hpp"
#include "affinv/ellipsoid.hpp"
#include "affinv/geometry.hpp"
#include "affinv/orbit.hpp"
#include "affinv/symmetry.hpp"

namespace affinv {

using Json = nlohmann::json;

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

// Body JSON: {"dim": n, "vertices": [[...], ...]}. The writer emits canonical
// order; the reader canonicalizes whatever it is given.
Json to_json(const ConvexBody& K);
ConvexBody body_from_json(const Json& j);

Json to_json(const AffineMap& g);
AffineMap map_from_json(const Json& j);

Json to_json(const Ellipsoid& E);
Ellipsoid ellipsoid_from_json(const Json& j);

Json to_json(const SymmetryGroup& G);
Json to_json(const AffineSubspace& S);
Json to_json(const AlignmentResult& r);

Json to_json(const InvariantPointDescriptor& desc);
// Revalidates build-time invariants; corrupted descriptors are rejected.
InvariantPointDescriptor descriptor_from_json(const Json& j);

Json read_json_file(const std::string& path);              // throws IoError
void write_text_file(const std::string& path, const std::string& text);

}  // namespace affinv
