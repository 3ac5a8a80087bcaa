#pragma once
// JSON encodings shared by the library consumers and the command line tool.
// Parsers throw std::invalid_argument with a short diagnostic on malformed
// input; emitters use ordered objects so output bytes are deterministic.

#include <json.hpp>

#include "quiverpath/fock.hpp"
#include "quiverpath/multisegments.hpp"
#include "quiverpath/partitions.hpp"
#include "quiverpath/paths.hpp"
#include "quiverpath/quiverlab.hpp"
#include "quiverpath/weights.hpp"

namespace quiverpath {

using Json = nlohmann::ordered_json;

Json to_json(const YoungDiagram& y);             // [l_1, l_2, ...]
Json to_json(const ChargedMaya& m);              // {"parts":[...],"charge":g}
Json to_json(const BasicPath& p);                // {"n":..,"prefix":[..]} with
                                                 // "offset" only when nonzero
Json to_json(const SegmentMultiset& f);          // {"mode","n"?,"segments":[..]}
Json to_json(const MayaTuple& m);                // bare array of entry records
Json to_json(const LevelPath& eta);              // {"n","charges","prefix"}
Json to_json(const AffineWeight& w);             // {"h":[...],"deg":..}
Json to_json(const FockVector& v);               // {"terms":[{"parts","coeff"}]}
Json to_json(const RatMatrix& m);                // rows of rational strings
Json to_json(const QuiverRep& x);                // spaces plus both map families

YoungDiagram young_from_json(const Json& j);
ChargedMaya charged_maya_from_json(const Json& j);
SegmentMultiset segments_from_json(const Json& j);
// The tuple encoding is a bare entry array, so the mode comes from context.
MayaTuple tuple_from_json(const Json& j, SegmentMode mode);
LevelPath path_from_json(const Json& j);
FockVector fock_from_json(const Json& j);

}  // namespace quiverpath
