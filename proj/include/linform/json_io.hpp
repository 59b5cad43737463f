#pragma once

#include "linform/recognize.hpp"
#include "linform/repcount.hpp"
#include "linform/sets.hpp"

#include <json.hpp>

namespace linform {

// All integers cross the JSON boundary as decimal strings; object key order
// is insertion order so output is deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const DigitVector& digits);
Json to_json(const Representation& rep); // flat {"coeff": "element", ...}
Json to_json(const CountReport& report);
Json to_json(const CollisionWitness& witness);
Json to_json(const RecognitionResult& result);
Json to_json(const ForcedPrefix& forced);
Json to_json(const SearchReport& report);

} // namespace linform
