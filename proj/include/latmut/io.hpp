#pragma once

#include "latmut/classify.hpp"
#include "latmut/graded.hpp"
#include "latmut/tangent.hpp"
#include "latmut/toric.hpp"

#include <json.hpp>

#include <string>

namespace latmut {

using Json = nlohmann::ordered_json;

// Human syntax in x and y; negative exponents are allowed on monomials.
LaurentPoly parse_laurent(const std::string& text);
// "a,b,h" or "[a,b,h]".
ExtDualVec parse_ext(const std::string& text);
LatticeVec parse_lattice(const std::string& text);
// Comma separated integers, optionally in brackets.
std::vector<long> parse_index(const std::string& text);

Json to_json(const LatticeVec& v);
Json to_json(const ExtDualVec& v);
Json to_json(const Polygon& P);
Json to_json(const LaurentPoly& f);
Json to_json(const GradedPoly& p);
Json to_json(const RelationCert& c);
Json to_json(const MonoidData& md);
Json to_json(const TraceStep& s);
Json to_json(const MutationTrace& t);
Json to_json(const T1Report& r);
Json to_json(const MaxMutableResult& r);
Json to_json(const PersistenceReport& r);

LatticeVec lattice_from_json(const Json& j);
ExtDualVec ext_from_json(const Json& j);
Polygon polygon_from_json(const Json& j);
// Accepts {"terms": [...]}, {"poly": "<human syntax>"} or a bare string.
LaurentPoly laurent_from_json(const Json& j);
MutationTrace trace_from_json(const Json& j);

Json read_json_file(const std::string& path);
// File holding a polynomial as JSON, or as human syntax text.
LaurentPoly read_laurent_file(const std::string& path);
// File holding a polygon, or a polynomial whose Newton polygon is used.
Polygon read_polygon_file(const std::string& path);

}  // namespace latmut
