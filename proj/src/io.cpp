#include "berkrh/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "berkrh/errors.hpp"

namespace berkrh::io {

namespace {

const std::regex& rational_re() {
  static const std::regex re("^-?[0-9]+(/[0-9]+)?$");
  return re;
}

const std::regex& integer_re() {
  static const std::regex re("^-?[0-9]+$");
  return re;
}

void reject_floats(const Json& j, const std::string& path) {
  if (j.is_number_float()) throw InputError(path + ": floating-point literal; write exact values as \"a/b\" strings");
  if (j.is_object())
    for (const auto& [k, v] : j.items()) reject_floats(v, path + "." + k);
  if (j.is_array())
    for (std::size_t i = 0; i < j.size(); ++i) reject_floats(j[i], path + "[" + std::to_string(i) + "]");
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(field + "." + key + ": missing");
  return *it;
}

void require_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) throw InputError(field + "." + k + ": unknown field");
}

std::vector<DiscSpec> parse_discs(const Json& j, const std::string& field, DiscKind kind) {
  std::vector<DiscSpec> out;
  if (!j.is_array()) throw InputError(field + ": expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    require_keys(j[i], {"center", "log_radius"}, f);
    out.push_back(DiscSpec{parse_projq(member(j[i], "center", f), f + ".center"),
                           parse_rational(member(j[i], "log_radius", f), f + ".log_radius"), kind});
  }
  return out;
}

Side parse_side(const Json& j, const std::string& field) {
  if (j == "inside") return Side::inside;
  if (j == "outside") return Side::outside;
  throw InputError(field + ": expected \"inside\" or \"outside\"");
}

std::string side_name(Side s) { return s == Side::inside ? "inside" : "outside"; }

Json nu_terms(const std::vector<NuTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(Json{{"center", to_json(t.center)}, {"log_radius", to_json(t.log_radius)}, {"nu", t.nu}});
  return arr;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": invalid JSON: " + e.what());
  }
  reject_floats(j, origin);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Rational parse_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.dump(), 10);
  if (!j.is_string()) throw InputError(field + ": expected a rational string \"a/b\"");
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, rational_re())) throw InputError(field + ": malformed rational \"" + s + "\"");
  const auto slash = s.find('/');
  if (slash != std::string::npos && Integer(s.substr(slash + 1)) == 0) throw InputError(field + ": zero denominator");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

ProjQ parse_projq(const Json& j, const std::string& field) {
  if (j == "inf") return ProjQ::infinity();
  return ProjQ(parse_rational(j, field));
}

long parse_long(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string() && std::regex_match(j.get<std::string>(), integer_re())) return std::stol(j.get<std::string>());
  throw InputError(field + ": expected an integer");
}

Prime parse_prime(const Json& j, const std::string& field) {
  long v = parse_long(j, field);
  try {
    return Prime(v);
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

LaurentPoly parse_poly(const Json& j, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object {exponent: coefficient}");
  LaurentPoly f;
  for (const auto& [k, v] : j.items()) {
    if (!std::regex_match(k, integer_re())) throw InputError(field + "." + k + ": exponent must be an integer");
    f += LaurentPoly::monomial(parse_rational(v, field + "." + k), std::stol(k));
  }
  return f;
}

RationalMap parse_map(const Json& j, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object");
  if (!j.contains("num")) {
    LaurentPoly f = parse_poly(j, field);
    if (!f.is_polynomial()) throw InputError(field + ": negative exponents in a map");
    return RationalMap::polynomial(f);
  }
  require_keys(j, {"num", "den"}, field);
  LaurentPoly num = parse_poly(j["num"], field + ".num");
  LaurentPoly den = j.contains("den") ? parse_poly(j["den"], field + ".den") : LaurentPoly::constant(Rational(1));
  if (!num.is_polynomial()) throw InputError(field + ".num: negative exponents");
  if (!den.is_polynomial()) throw InputError(field + ".den: negative exponents");
  if (den.is_zero()) throw InputError(field + ".den: zero denominator");
  return RationalMap(num, den);
}

FtDomainP1 parse_domain(const Json& j, const std::string& field) {
  require_keys(j, {"genus", "removed_open", "removed_closed"}, field);
  FtDomainP1 Y;
  if (j.contains("genus")) Y.genus = parse_long(j["genus"], field + ".genus");
  if (j.contains("removed_open"))
    Y.removed_open = parse_discs(j["removed_open"], field + ".removed_open", DiscKind::open);
  if (j.contains("removed_closed"))
    Y.removed_closed = parse_discs(j["removed_closed"], field + ".removed_closed", DiscKind::closed);
  return Y;
}

TangentDirection parse_direction(const Json& j, const std::string& field) {
  require_keys(j, {"center", "log_radius", "side", "image_center"}, field);
  return TangentDirection{parse_projq(member(j, "center", field), field + ".center"),
                          parse_rational(member(j, "log_radius", field), field + ".log_radius"),
                          parse_side(member(j, "side", field), field + ".side")};
}

MorphismSpec parse_morphism(const Json& j) {
  const std::string f = "morphism";
  require_keys(j, {"map", "domain", "codomain", "direction_images", "p", "probes"}, f);
  MorphismSpec M;
  M.p = parse_prime(member(j, "p", f), f + ".p");
  M.map = parse_map(member(j, "map", f), f + ".map");
  if (M.map.is_constant()) throw InputError(f + ".map: constant map");
  M.domain = domain_validate(parse_domain(member(j, "domain", f), f + ".domain"), M.p);
  M.codomain = domain_validate(parse_domain(member(j, "codomain", f), f + ".codomain"), M.p);
  const Json& di = member(j, "direction_images", f);
  if (!di.is_object()) throw InputError(f + ".direction_images: expected an object");
  for (const auto& [k, v] : di.items()) {
    const std::string kf = f + ".direction_images." + k;
    M.direction_images[center_key(parse_projq(Json(k), kf))] = center_key(parse_projq(v, kf));
  }
  if (j.contains("probes")) {
    if (!j["probes"].is_array()) throw InputError(f + ".probes: expected an array");
    for (std::size_t i = 0; i < j["probes"].size(); ++i)
      M.probes.push_back(parse_projq(j["probes"][i], f + ".probes[" + std::to_string(i) + "]"));
  }
  return M;
}

TriangGraph parse_graph(const Json& j) {
  const std::string f = "graph";
  require_keys(j, {"vertices", "internal_edges", "external_ends", "chi_total", "deg"}, f);
  TriangGraph G;
  G.chi_total = parse_long(member(j, "chi_total", f), f + ".chi_total");
  G.deg = parse_long(member(j, "deg", f), f + ".deg");
  const Json& vs = member(j, "vertices", f);
  if (!vs.is_array()) throw InputError(f + ".vertices: expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string vf = f + ".vertices[" + std::to_string(i) + "]";
    require_keys(vs[i], {"id", "chi_piece", "deg_local", "ram_local", "chi_X_piece"}, vf);
    const Json& id = member(vs[i], "id", vf);
    if (!id.is_string()) throw InputError(vf + ".id: expected a string");
    G.vertices.push_back(LedgerVertex{id.get<std::string>(), parse_long(member(vs[i], "chi_piece", vf), vf + ".chi_piece"),
                                      parse_long(member(vs[i], "deg_local", vf), vf + ".deg_local"),
                                      parse_long(member(vs[i], "ram_local", vf), vf + ".ram_local"),
                                      parse_long(member(vs[i], "chi_X_piece", vf), vf + ".chi_X_piece")});
  }
  auto parse_end = [](const Json& e, const std::string& ef) {
    require_keys(e, {"vertex", "nu"}, ef);
    const Json& v = member(e, "vertex", ef);
    if (!v.is_string()) throw InputError(ef + ".vertex: expected a string");
    return EdgeEnd{v.get<std::string>(), parse_long(member(e, "nu", ef), ef + ".nu")};
  };
  if (j.contains("internal_edges")) {
    const Json& es = j["internal_edges"];
    if (!es.is_array()) throw InputError(f + ".internal_edges: expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string ef = f + ".internal_edges[" + std::to_string(i) + "]";
      require_keys(es[i], {"id", "end_a", "end_b"}, ef);
      std::string id = es[i].contains("id") && es[i]["id"].is_string() ? es[i]["id"].get<std::string>() : std::to_string(i);
      G.internal_edges.push_back(LedgerEdge{id, parse_end(member(es[i], "end_a", ef), ef + ".end_a"),
                                            parse_end(member(es[i], "end_b", ef), ef + ".end_b")});
    }
  }
  if (j.contains("external_ends")) {
    const Json& xs = j["external_ends"];
    if (!xs.is_array()) throw InputError(f + ".external_ends: expected an array");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::string xf = f + ".external_ends[" + std::to_string(i) + "]";
      require_keys(xs[i], {"vertex", "kind", "nu", "center", "log_radius"}, xf);
      ExternalEnd x;
      const Json& v = member(xs[i], "vertex", xf);
      if (!v.is_string()) throw InputError(xf + ".vertex: expected a string");
      x.vertex = v.get<std::string>();
      const Json& kind = member(xs[i], "kind", xf);
      if (kind == "TY") x.kind = EndKind::TY;
      else if (kind == "T_in") x.kind = EndKind::T_in;
      else throw InputError(xf + ".kind: expected \"TY\" or \"T_in\"");
      x.nu = parse_long(member(xs[i], "nu", xf), xf + ".nu");
      x.center = parse_projq(member(xs[i], "center", xf), xf + ".center");
      x.log_radius = parse_rational(member(xs[i], "log_radius", xf), xf + ".log_radius");
      G.external_ends.push_back(x);
    }
  }
  validate_graph(G);
  return G;
}

std::vector<Rational> parse_hints(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field + ": expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_rational(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json to_json(const Rational& q) { return q.get_str(); }
Json to_json(const ProjQ& x) { return berkrh::to_string(x); }
Json to_json(const ValQ& v) { return berkrh::to_string(v); }

Json to_json(const LaurentPoly& f) {
  Json j = Json::object();
  for (const auto& [e, c] : f.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

Json to_json(const RationalMap& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const DiscSpec& D) { return Json{{"center", to_json(D.center)}, {"log_radius", to_json(D.log_radius)}}; }

Json to_json(const FtDomainP1& Y) {
  Json open = Json::array();
  Json closed = Json::array();
  for (const auto& D : Y.removed_open) open.push_back(to_json(D));
  for (const auto& D : Y.removed_closed) closed.push_back(to_json(D));
  return Json{{"genus", Y.genus}, {"removed_open", open}, {"removed_closed", closed}};
}

Json to_json(const GermData& g) {
  return Json{{"d", g.d}, {"sigma", g.sigma}, {"nu", g.nu}, {"eps_val", to_json(g.eps_val)}};
}

Json to_json(const RHReport& r) {
  return Json{{"chi_Y", r.chi_Y},         {"chi_X", r.chi_X},       {"deg", r.deg}, {"ram_sum", r.ram_sum},
              {"nu_out", nu_terms(r.nu_out)}, {"nu_in", nu_terms(r.nu_in)}, {"lhs", r.lhs}, {"rhs", r.rhs},
              {"balanced", r.balanced}};
}

Json to_json(const Diagnostics& d) {
  Json arr = Json::array();
  for (const auto& c : d.checks) arr.push_back(Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return arr;
}

Json to_json(const RHOutcome& o) {
  return Json{{"validation", to_json(o.validation)}, {"report", o.report ? to_json(*o.report) : Json(nullptr)}};
}

Json to_json(const LocalSumReport& r) {
  Json dirs = Json::array();
  for (const auto& d : r.directions)
    dirs.push_back(Json{{"center", to_json(d.dir.center)},
                        {"log_radius", to_json(d.dir.log_radius)},
                        {"side", side_name(d.dir.side)},
                        {"sigma", d.sigma},
                        {"slope", d.slope},
                        {"hinted", d.hinted}});
  return Json{{"point", Json{{"center", to_json(r.point.center)}, {"log_radius", to_json(r.point.log_radius)}}},
              {"image_center", to_json(r.image_center)},
              {"image_log_radius", to_json(r.image_log_radius)},
              {"directions", dirs},
              {"degree", r.degree},
              {"total", r.total},
              {"expected", r.expected},
              {"zeros_accounted", r.zeros_accounted},
              {"status", to_string(r.status)}};
}

Json to_json(const CharPDivisor& c) {
  Json j = to_json(c.local);
  j["reduction_degree"] = c.reduction_degree;
  j["certified"] = c.certified;
  return j;
}

Json to_json(const LedgerReport& r) {
  Json res = Json::array();
  for (const auto& [id, v] : r.residuals) res.push_back(Json{{"vertex", id}, {"residual", v}});
  return Json{{"additivity", r.additivity},
              {"cancellation", r.cancellation},
              {"residuals", res},
              {"locally_balanced", r.locally_balanced},
              {"global", r.global ? to_json(*r.global) : Json(nullptr)}};
}

Json polygon_report(const ValPolygon& P) {
  Json verts = Json::array();
  for (const auto& pt : P.hull()) verts.push_back(Json::array({pt.i, pt.v.get_str()}));
  Json bps = Json::array();
  Json mult = Json::array();
  for (const auto& [s, m] : P.breakpoints()) {
    bps.push_back(s.get_str());
    mult.push_back(m);
  }
  return Json{{"vertices", verts}, {"breakpoints", bps}, {"multiplicities", mult}};
}

// ---------------------------------------------------------------------------
// Schemas

namespace {

Json ref(const std::string& name) { return Json{{"$ref", "#/" + name}}; }
Json array_of(const Json& items) { return Json{{"type", "array"}, {"items", items}}; }
Json integer() { return Json{{"type", "integer"}}; }
Json boolean() { return Json{{"type", "boolean"}}; }
Json string_t() { return Json{{"type", "string"}}; }

Json object(std::vector<std::pair<std::string, Json>> props, std::vector<std::string> required, bool closed = true) {
  Json p = Json::object();
  for (auto& [k, v] : props) p[k] = v;
  Json j{{"type", "object"}, {"properties", p}, {"required", required}};
  if (closed) j["additionalProperties"] = false;
  return j;
}

Json build_schemas() {
  Json s = Json::object();
  s["rational"] = Json{{"type", Json::array({"string", "integer"})}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
  s["projective"] = Json{{"type", Json::array({"string", "integer"})}, {"pattern", "^(inf|-?[0-9]+(/[0-9]+)?)$"}};
  s["polynomial"] = Json{{"type", "object"}, {"additionalProperties", ref("rational")}};
  s["map"] = object({{"num", ref("polynomial")}, {"den", ref("polynomial")}}, {"num"});
  s["disc"] = object({{"center", ref("projective")}, {"log_radius", ref("rational")}}, {"center", "log_radius"});
  s["domain"] = object({{"genus", integer()},
                        {"removed_open", array_of(ref("disc"))},
                        {"removed_closed", array_of(ref("disc"))}},
                       {});
  s["direction"] = object({{"center", ref("projective")},
                           {"log_radius", ref("rational")},
                           {"side", Json{{"enum", Json::array({"inside", "outside"})}}},
                           {"image_center", ref("projective")}},
                          {"center", "log_radius", "side"});
  s["morphism"] = object({{"map", ref("map")},
                          {"domain", ref("domain")},
                          {"codomain", ref("domain")},
                          {"direction_images", Json{{"type", "object"}, {"additionalProperties", ref("projective")}}},
                          {"p", integer()},
                          {"probes", array_of(ref("projective"))}},
                         {"map", "domain", "codomain", "direction_images", "p"});
  Json end = object({{"vertex", string_t()}, {"nu", integer()}}, {"vertex", "nu"});
  s["graph"] = object({{"vertices", array_of(object({{"id", string_t()},
                                                      {"chi_piece", integer()},
                                                      {"deg_local", integer()},
                                                      {"ram_local", integer()},
                                                      {"chi_X_piece", integer()}},
                                                     {"id", "chi_piece", "deg_local", "ram_local", "chi_X_piece"}))},
                       {"internal_edges", array_of(object({{"id", string_t()}, {"end_a", end}, {"end_b", end}},
                                                          {"end_a", "end_b"}))},
                       {"external_ends", array_of(object({{"vertex", string_t()},
                                                          {"kind", Json{{"enum", Json::array({"TY", "T_in"})}}},
                                                          {"nu", integer()},
                                                          {"center", ref("projective")},
                                                          {"log_radius", ref("rational")}},
                                                         {"vertex", "kind", "nu", "center", "log_radius"}))},
                       {"chi_total", integer()},
                       {"deg", integer()}},
                      {"vertices", "chi_total", "deg"});
  s["hints"] = array_of(ref("rational"));

  // Reports.
  s["polygon_report"] = object({{"vertices", array_of(Json{{"type", "array"}})},
                                {"breakpoints", array_of(ref("rational"))},
                                {"multiplicities", array_of(integer())},
                                {"range", object({{"lo", ref("rational")},
                                                  {"hi", ref("rational")},
                                                  {"zeros_closed", integer()},
                                                  {"invertible_open", boolean()}},
                                                 {"lo", "hi", "zeros_closed", "invertible_open"})}},
                               {"vertices", "breakpoints", "multiplicities"});
  s["germ"] = object({{"d", integer()}, {"sigma", integer()}, {"nu", integer()}, {"eps_val", ref("projective")}},
                     {"d", "sigma", "nu", "eps_val"});
  s["annulus_report"] = object({{"direction", ref("direction")},
                                {"image_center", ref("projective")},
                                {"germ", ref("germ")},
                                {"different", ref("projective")},
                                {"discriminant", ref("projective")}},
                               {"direction", "image_center", "germ", "different", "discriminant"});
  s["euler_report"] = object({{"genus", integer()}, {"m", integer()}, {"chi", integer()}}, {"genus", "m", "chi"});
  Json nu_term = object({{"center", ref("projective")}, {"log_radius", ref("rational")}, {"nu", integer()}},
                        {"center", "log_radius", "nu"});
  s["rh_report"] = object({{"chi_Y", integer()},
                           {"chi_X", integer()},
                           {"deg", integer()},
                           {"ram_sum", integer()},
                           {"nu_out", array_of(nu_term)},
                           {"nu_in", array_of(nu_term)},
                           {"lhs", integer()},
                           {"rhs", integer()},
                           {"balanced", boolean()}},
                          {"chi_Y", "chi_X", "deg", "ram_sum", "nu_out", "nu_in", "lhs", "rhs", "balanced"});
  Json check = object({{"check", string_t()}, {"passed", boolean()}, {"detail", string_t()}}, {"check", "passed", "detail"});
  s["rh_check_output"] = object({{"validation", array_of(check)},
                                 {"report", Json{{"anyOf", Json::array({ref("rh_report"), Json{{"type", "null"}}})}}}},
                                {"validation", "report"});
  s["ledger_report"] = object(
      {{"additivity", boolean()},
       {"cancellation", boolean()},
       {"residuals", array_of(object({{"vertex", string_t()}, {"residual", integer()}}, {"vertex", "residual"}))},
       {"locally_balanced", boolean()},
       {"global", Json{{"anyOf", Json::array({ref("rh_report"), Json{{"type", "null"}}})}}}},
      {"additivity", "cancellation", "residuals", "locally_balanced", "global"});
  Json dir_sigma = object({{"center", ref("projective")},
                           {"log_radius", ref("rational")},
                           {"side", Json{{"enum", Json::array({"inside", "outside"})}}},
                           {"sigma", integer()},
                           {"slope", integer()},
                           {"hinted", boolean()}},
                          {"center", "log_radius", "side", "sigma", "slope", "hinted"});
  s["charp_report"] = object({{"point", ref("disc")},
                              {"image_center", ref("projective")},
                              {"image_log_radius", ref("rational")},
                              {"directions", array_of(dir_sigma)},
                              {"degree", integer()},
                              {"total", integer()},
                              {"expected", integer()},
                              {"zeros_accounted", boolean()},
                              {"status", Json{{"enum", Json::array({"VERIFIED", "INCOMPLETE"})}}},
                              {"reduction_degree", integer()},
                              {"certified", boolean()}},
                             {"point", "directions", "degree", "total", "expected", "status", "certified"});
  s["frobenius_report"] = object({{"p", integer()},
                                  {"f1", ref("rh_report")},
                                  {"f2", ref("rh_report")},
                                  {"f2_sigma_inf", integer()},
                                  {"divisor_phi1", ref("charp_report")},
                                  {"divisor_phi2", ref("charp_report")}},
                                 {"p", "f1", "f2", "divisor_phi1", "divisor_phi2"});
  return s;
}

bool type_matches(const Json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "integer") return doc.is_number_integer();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  return false;
}

void validate_at(const Json& doc, const Json& schema, const std::string& path, std::vector<std::string>& errs) {
  if (schema.contains("$ref")) {
    const std::string name = schema["$ref"].get<std::string>().substr(2);
    if (!schemas().contains(name)) {
      errs.push_back(path + ": unknown schema " + name);
      return;
    }
    validate_at(doc, schemas()[name], path, errs);
    return;
  }
  if (schema.contains("anyOf")) {
    for (const auto& alt : schema["anyOf"]) {
      std::vector<std::string> sub;
      validate_at(doc, alt, path, sub);
      if (sub.empty()) return;
    }
    errs.push_back(path + ": matches no alternative");
    return;
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_matches(doc, t.get<std::string>());
    } else {
      ok = type_matches(doc, schema["type"].get<std::string>());
    }
    if (!ok) {
      errs.push_back(path + ": wrong type");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || v == doc;
    if (!found) errs.push_back(path + ": value not in enum");
  }
  if (schema.contains("pattern") && doc.is_string() &&
      !std::regex_match(doc.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
    errs.push_back(path + ": does not match " + schema["pattern"].get<std::string>());
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!doc.contains(k.get<std::string>())) errs.push_back(path + "." + k.get<std::string>() + ": missing");
    for (const auto& [k, v] : doc.items()) {
      if (schema.contains("properties") && schema["properties"].contains(k)) {
        validate_at(v, schema["properties"][k], path + "." + k, errs);
      } else if (schema.contains("additionalProperties")) {
        const Json& ap = schema["additionalProperties"];
        if (ap.is_boolean()) {
          if (!ap.get<bool>()) errs.push_back(path + "." + k + ": unexpected field");
        } else {
          validate_at(v, ap, path + "." + k, errs);
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < doc.size(); ++i)
      validate_at(doc[i], schema["items"], path + "[" + std::to_string(i) + "]", errs);
}

}  // namespace

const Json& schemas() {
  static const Json s = build_schemas();
  return s;
}

std::vector<std::string> validate_schema(const Json& doc, const Json& schema) {
  std::vector<std::string> errs;
  validate_at(doc, schema, "$", errs);
  return errs;
}

}  // namespace berkrh::io
