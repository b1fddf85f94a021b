#pragma once

// JSON input files and report serialisation. Numbers are exact: rationals
// are strings "a/b" (or JSON integers), infinity is "inf", and floating-point
// literals are rejected everywhere. Every parse error names its field path.

#include <string>
#include <vector>

#include "json.hpp"

#include "berkrh/berkdomain.hpp"
#include "berkrh/laurent.hpp"
#include "berkrh/ledger.hpp"
#include "berkrh/ramification.hpp"
#include "berkrh/rhcheck.hpp"
#include "berkrh/valpolygon.hpp"

namespace berkrh::io {

using Json = nlohmann::ordered_json;

// Parses a file; throws InputError on unreadable files, syntax errors and
// floating-point literals.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

Rational parse_rational(const Json& j, const std::string& field);
ProjQ parse_projq(const Json& j, const std::string& field);
long parse_long(const Json& j, const std::string& field);
Prime parse_prime(const Json& j, const std::string& field);
LaurentPoly parse_poly(const Json& j, const std::string& field);
// {"num": poly, "den": poly} (den defaults to 1), or a bare polynomial.
RationalMap parse_map(const Json& j, const std::string& field);
FtDomainP1 parse_domain(const Json& j, const std::string& field);
TangentDirection parse_direction(const Json& j, const std::string& field);
MorphismSpec parse_morphism(const Json& j);
TriangGraph parse_graph(const Json& j);
std::vector<Rational> parse_hints(const Json& j, const std::string& field);

Json to_json(const Rational& q);
Json to_json(const ProjQ& x);
Json to_json(const ValQ& v);
Json to_json(const LaurentPoly& f);
Json to_json(const RationalMap& f);
Json to_json(const DiscSpec& D);
Json to_json(const FtDomainP1& Y);
Json to_json(const GermData& g);
Json to_json(const RHReport& r);
Json to_json(const Diagnostics& d);
Json to_json(const RHOutcome& o);
Json to_json(const LocalSumReport& r);
Json to_json(const CharPDivisor& c);
Json to_json(const LedgerReport& r);
Json polygon_report(const ValPolygon& P);

// Published schemas, keyed by name ("domain", "rh_report", ...).
const Json& schemas();

// Checks doc against a schema written in the JSON-Schema subset used by
// schemas(): type, required, properties, additionalProperties, items, enum,
// pattern, $ref to "#/<name>". Returns the list of violations.
std::vector<std::string> validate_schema(const Json& doc, const Json& schema);

}  // namespace berkrh::io
