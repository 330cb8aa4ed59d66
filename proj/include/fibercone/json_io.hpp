#pragma once

#include <json.hpp>

#include "fibercone/depth.hpp"
#include "fibercone/monomial_ideal.hpp"
#include "fibercone/presentation.hpp"
#include "fibercone/semigroup.hpp"
#include "fibercone/shape.hpp"
#include "fibercone/symmetric.hpp"

namespace fibercone {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json shape_to_json(const ShapeReport& report);
ShapeReport shape_from_json(const Json& j);

Json hilbert_to_json(const HilbertData& data);
HilbertData hilbert_from_json(const Json& j);

Json presentation_to_json(const PresentationIdeal& presentation);

Json symmetric4_to_json(const Symmetric4Report& report);
Symmetric4Report symmetric4_from_json(const Json& j);

Json apery_to_json(const AperyResult& result);
Json cn_to_json(bool cohen_macaulay, const CnDiagnostics& diag);

Json verdict_to_json(const DepthVerdict& verdict);

}  // namespace fibercone
