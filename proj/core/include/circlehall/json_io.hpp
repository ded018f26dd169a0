#pragma once

#include <json.hpp>

#include "circlehall/fund_rep.hpp"
#include "circlehall/mirror.hpp"
#include "circlehall/shuffle.hpp"
#include "circlehall/words.hpp"

namespace circlehall {

using json = nlohmann::ordered_json;

// Rationals are serialized as strings "p/q" throughout.
json to_json(const Rat& r);
json to_json(const Scalar& s);          // {"q": int, "c": ["p/q" x4]}
json to_json(const Arc& a);             // {"right":"1/2","len":"1/2"}
json to_json(const StepFunction& f);    // {"n":4,"values":[...]}
json to_json(const KClass& k);
json to_json(const TorsionObject& t);   // {"arcs":[...]}
json to_json(const HallElement& e);
json to_json(const TensorComponent& t);
json to_json(const DoubleElement& d);
json to_json(const ShuffleElement& e);
json to_json(const MirrorElement& e);
json to_json(const RepVector& v);

Rat rat_from_json(const json& j);
Scalar scalar_from_json(const json& j);
Arc arc_from_json(const json& j);
StepFunction step_from_json(const json& j);
KClass kclass_from_json(const json& j);
TorsionObject torsion_from_json(const json& j);
HallElement hall_from_json(const json& j);

}  // namespace circlehall
