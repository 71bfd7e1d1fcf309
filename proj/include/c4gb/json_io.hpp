#pragma once

#include <json.hpp>

#include "c4gb/connect4gb.hpp"
#include "c4gb/decomposition.hpp"
#include "c4gb/pointset.hpp"
#include "c4gb/stratum.hpp"

namespace c4gb {

// ordered_json keeps insertion order, which makes every emitted document
// byte-deterministic. Parsers accept any member order and throw ParseError
// with context on malformed input.
using Json = nlohmann::ordered_json;

Json json_of(const StandardSet& s);
StandardSet standard_set_from_json(const Json& j);

Json json_of(const FieldDesc& fd);
FieldDesc field_from_json(const Json& j);

// Rationals encode as "n" or "n/d" strings, residues as plain integers.
Json json_of_coef(const FieldElement& c);
FieldElement coef_from_json(const Json& j, const FieldDesc& fd);

Json json_of(const LexPolynomial& p);
LexPolynomial polynomial_from_json(const Json& j);

Json json_of(const ReducedGB& gb);
ReducedGB gb_from_json(const Json& j);

Json json_of(const PointSet& a);
PointSet point_set_from_json(const Json& j);

Json json_of(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json json_of(const SlicedInstance& inst);
SlicedInstance instance_from_json(const Json& j);

Json json_of(const ConnectFourResult& r);
Json json_of(const MembershipReport& r);
Json json_of(const StratumReport& r);

Json graph_to_json(const IteratedGraph& g);
std::string graph_to_dot(const IteratedGraph& g);

}  // namespace c4gb
