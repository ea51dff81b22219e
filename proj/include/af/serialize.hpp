#pragma once
// JSON serialization: exact, bit-stable encodings of field elements,
// octonions, Albert vectors, operators and generator descriptors.
//
// FieldElement:  {"p":2,"k":2,"coeffs":[1,1]}      (constant term first)
// Octonion:      {"coeffs":[[...]x8]}              (canonical index order)
// AlbertVector:  {"p":..,"k":..,"a":[...],"b":[...],"c":[...],
//                 "A":[[...]x8],"B":[[...]x8],"C":[[...]x8]}
// Operator:      {"p":..,"k":..,"rows":[27x27 coefficient lists]}

#include <json.hpp>

#include "af/albert.hpp"
#include "af/gf.hpp"
#include "af/group.hpp"
#include "af/octonion.hpp"

namespace af {

using Json = nlohmann::json;

Json field_json(const Field& f);

Json fe_json(const Fe& x);
Fe fe_from_json(const Json& j);

Json oct_json(const Octonion& x);
Octonion oct_from_json(const Json& j, const Field& f);

Json albert_json(const AlbertVector& X);
AlbertVector albert_from_json(const Json& j);

Json op_json(const LinearOp27& op);
LinearOp27 op_from_json(const Json& j);

Json generator_json(const Generator& g);

}  // namespace af
