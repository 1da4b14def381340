////////////////////////////////////////////////////////////////////////////////
// laminate_io.hh
////////////////////////////////////////////////////////////////////////////////
// JSON schema for laminate trees and SG cells. Stresses are serialized as
// Cartesian triples [s11, s22, s12]; everything else is stored verbatim.
//
//   layer node: {"kind":"layer","normal":"e1"|"e2","fraction":x,"a":...,"b":...}
//   phase node: {"kind":"phase","id":1|2|3,"stress":[s11,s22,s12]}
//   SG cell:    {"kind":"sg","beta":[b1,b2,b3,b4],
//                "fields":{"tau11":[...],"tau12":[...],"tau2":[...]}}
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <json.hpp>

#include "trilam/laminate.hh"

namespace trilam {

nlohmann::json to_json(const LaminateNode &node);
nlohmann::json to_json(const SGCell &cell);

LaminateNode laminate_from_json(const nlohmann::json &j);

}  // namespace trilam
