#pragma once

#include <json.hpp>

#include "fibrekit/matrix.hpp"
#include "fibrekit/pants.hpp"
#include "fibrekit/polynomial.hpp"
#include "fibrekit/scl.hpp"
#include "fibrekit/surface.hpp"
#include "fibrekit/twist.hpp"
#include "fibrekit/twist_length.hpp"

// JSON documents emitted by the workbench. Exact values (integers that may
// grow, rationals) are strings; small counts and indices are numbers.
// Objects keep insertion order so output is byte-stable.
namespace fibrekit::workbench {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceSignature& surface);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const IntegerPolynomial& p);
Json to_json(const AlexanderReport& report);
Json to_json(const ObstructionCertificate& cert);
Json to_json(const RationalBound& bound);
Json to_json(const Derivation& derivation);
Json to_json(const HeightStep& step);
Json to_json(const pants::CutReport& report);

// Read-back used by --verify. Throws std::invalid_argument on documents
// that do not match the emitted schema.
SurfaceSignature surface_from_json(const Json& j);
RationalBound bound_from_json(const Json& j);
DerivationPtr derivation_from_json(const Json& j);
HeightStep height_step_from_json(const Json& j);
ObstructionCertificate certificate_from_json(const Json& j, const SurfaceSignature& surface);

}  // namespace fibrekit::workbench
