#include "berkrh/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "berkrh/errors.hpp"
#include "berkrh/io.hpp"

namespace berkrh {

namespace {

using io::Json;

std::string format_poly(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    auto [e, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string mono = e == 0 ? "" : (e == 1 ? "T" : "T^" + std::to_string(e));
    std::string coef = (a == 1 && e != 0) ? "" : a.get_str() + (mono.empty() ? "" : "*");
    if (out.empty()) out = (neg ? "-" : "") + coef + mono;
    else out += (neg ? " - " : " + ") + coef + mono;
  }
  return out;
}

std::string format_map(const RationalMap& f) {
  if (f.is_polynomial() && f.den().leading_coeff() == 1) return format_poly(f.num());
  return "(" + format_poly(f.num()) + ") / (" + format_poly(f.den()) + ")";
}

std::string balance_line(const RHReport& r) {
  long out = 0;
  long in = 0;
  for (const auto& t : r.nu_out) out += t.nu;
  for (const auto& t : r.nu_in) in += t.nu;
  std::ostringstream os;
  os << r.lhs << " = " << r.deg << "*" << r.chi_X << " - " << r.ram_sum << " - " << out;
  if (!r.nu_in.empty()) os << " + " << in;
  os << (r.balanced ? "  balanced" : "  NOT balanced (rhs " + std::to_string(r.rhs) + ")");
  return os.str();
}

void print_rh_report(std::ostream& out, const RHReport& r) {
  out << "chi(Y) = " << r.chi_Y << ", chi(X) = " << r.chi_X << ", deg = " << r.deg << ", ram = " << r.ram_sum << "\n";
  for (const auto& t : r.nu_out) out << "  TY   (" << to_string(t.center) << ", " << t.log_radius.get_str() << ")  nu = " << t.nu << "\n";
  for (const auto& t : r.nu_in) out << "  T_in (" << to_string(t.center) << ", " << t.log_radius.get_str() << ")  nu = " << t.nu << "\n";
  out << balance_line(r) << "\n";
}

std::string direction_label(const DirectionSigma& d) {
  return d.dir.side == Side::outside ? "inf~" : to_string(d.dir.center) + "~";
}

void print_local(std::ostream& out, const LocalSumReport& r) {
  out << "point eta(" << to_string(r.point.center) << ", " << r.point.log_radius.get_str() << ") -> eta("
      << to_string(r.image_center) << ", " << r.image_log_radius.get_str() << ")\n";
  for (const auto& d : r.directions)
    out << "  " << std::left << std::setw(10) << direction_label(d) << " sigma = " << d.sigma << (d.hinted ? "  (hint)" : "")
        << "\n";
  out << "sum sigma = " << r.total << ", 2*deg - 2 = " << r.expected << " (deg " << r.degree << "), "
      << to_string(r.status) << "\n";
}

MorphismSpec closed_disc_morphism(const RationalMap& f, const Prime& p) {
  MorphismSpec M;
  M.map = f;
  M.p = p;
  M.domain.removed_open.push_back(DiscSpec{ProjQ::infinity(), Rational(0), DiscKind::open});
  M.codomain = M.domain;
  M.direction_images["inf"] = "inf";
  return M;
}

struct Emitter {
  bool json;
  std::ostream& out;
  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

int cmd_polygon(const Emitter& em, const std::string& path, long p_raw, const std::vector<std::string>& range) {
  Prime p(p_raw);
  LaurentPoly f = io::parse_poly(io::read_json_file(path), path);
  ValPolygon P = build_polygon(f, p);
  Json j = io::polygon_report(P);
  if (!range.empty()) {
    Rational lo = io::parse_rational(Json(range.at(0)), "--range[0]");
    Rational hi = io::parse_rational(Json(range.at(1)), "--range[1]");
    if (!(lo < hi)) throw InputError("--range: need s1 < s2");
    j["range"] = Json{{"lo", lo.get_str()},
                      {"hi", hi.get_str()},
                      {"zeros_closed", count_zero_valuations(P, ValBound::closed(lo), ValBound::closed(hi))},
                      {"invertible_open", is_invertible_on(P, lo, hi)}};
  }
  if (em.json) {
    em.emit(j);
    return kExitOk;
  }
  em.out << "f = " << format_poly(f) << "\nvertices:";
  for (const auto& pt : P.hull()) em.out << " (" << pt.i << ", " << pt.v.get_str() << ")";
  em.out << "\nroot valuations:";
  for (const auto& [s, m] : P.breakpoints()) em.out << " " << s.get_str() << " x" << m;
  em.out << "\n";
  if (!range.empty())
    em.out << "zeros with " << range[0] << " <= v <= " << range[1] << ": " << j["range"]["zeros_closed"].get<long>()
           << ", invertible on the open annulus: " << (j["range"]["invertible_open"].get<bool>() ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_annulus(const Emitter& em, const std::string& map_path, const std::string& dir_path, long p_raw) {
  Prime p(p_raw);
  RationalMap f = io::parse_map(io::read_json_file(map_path), map_path);
  Json dj = io::read_json_file(dir_path);
  TangentDirection dir = io::parse_direction(dj, dir_path);
  if (!dj.contains("image_center")) throw InputError(dir_path + ".image_center: missing");
  ProjQ b = io::parse_projq(dj["image_center"], dir_path + ".image_center");
  GermData g = germ_data(f, dir, b, p);
  Json j{{"direction", dj},
         {"image_center", io::to_json(b)},
         {"germ", io::to_json(g)},
         {"different", io::to_json(different_value(g, dir.log_radius))},
         {"discriminant", io::to_json(discriminant_value(g, dir.log_radius, p))}};
  if (em.json) {
    em.emit(j);
    return kExitOk;
  }
  em.out << "map " << format_map(f) << " at (" << to_string(dir.center) << ", " << dir.log_radius.get_str() << ", "
         << (dir.side == Side::inside ? "inside" : "outside") << "), image center " << to_string(b) << "\n"
         << "d = " << g.d << ", sigma = " << g.sigma << ", nu = " << g.nu << ", v(eps) = " << to_string(g.eps_val) << "\n"
         << "different " << to_string(different_value(g, dir.log_radius)) << ", discriminant "
         << to_string(discriminant_value(g, dir.log_radius, p)) << "\n";
  return kExitOk;
}

int cmd_euler(const Emitter& em, const std::string& path, long p_raw) {
  FtDomainP1 Y = io::parse_domain(io::read_json_file(path), path);
  // Disjointness depends on p, so it is only checked when -p is given.
  if (p_raw != 0) domain_validate(Y, Prime(p_raw));
  const long m = static_cast<long>(Y.removed_open.size() + Y.removed_closed.size());
  const long chi = euler_char(Y);
  if (em.json) em.emit(Json{{"genus", Y.genus}, {"m", m}, {"chi", chi}});
  else em.out << "genus " << Y.genus << ", " << m << " removed discs: chi = " << chi << "\n";
  return kExitOk;
}

int cmd_rh(const Emitter& em, const std::string& path) {
  MorphismSpec M = io::parse_morphism(io::read_json_file(path));
  RHOutcome o = check_rh(M);
  const bool ok = o.report && o.report->balanced;
  if (em.json) {
    em.emit(io::to_json(o));
  } else {
    em.out << "map " << format_map(M.map) << ", p = " << M.p.value() << "\n";
    for (const auto& c : o.validation.checks)
      em.out << "  " << (c.passed ? "ok    " : "FAILED") << "  " << std::left << std::setw(28) << c.name << " " << c.detail
             << "\n";
    if (o.report) print_rh_report(em.out, *o.report);
    else em.out << "validation failed: no balance reported\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_ledger(const Emitter& em, const std::string& path) {
  TriangGraph G = io::parse_graph(io::read_json_file(path));
  LedgerReport r = assemble_global_rh(G);
  const bool ok = r.additivity && r.cancellation && r.locally_balanced && r.global && r.global->balanced;
  if (em.json) {
    em.emit(io::to_json(r));
  } else {
    em.out << "additivity " << (r.additivity ? "ok" : "FAILED") << ", edge cancellation "
           << (r.cancellation ? "ok" : "FAILED") << "\n";
    for (const auto& [id, res] : r.residuals) em.out << "  vertex " << std::left << std::setw(12) << id << " residual " << res << "\n";
    if (r.global) print_rh_report(em.out, *r.global);
    else em.out << "assembly refused\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_charp(const Emitter& em, const std::string& map_path, const std::string& hints_path, long p_raw) {
  Prime p(p_raw);
  RationalMap f = io::parse_map(io::read_json_file(map_path), map_path);
  std::vector<Rational> hints;
  if (!hints_path.empty()) hints = io::parse_hints(io::read_json_file(hints_path), hints_path);
  CharPDivisor c = char_p_divisor(f, hints, p);
  if (em.json) {
    em.emit(io::to_json(c));
  } else {
    em.out << "map " << format_map(f) << ", p = " << p.value() << "\n";
    print_local(em.out, c.local);
    em.out << "reduction degree " << c.reduction_degree << (c.certified ? ", certified" : ", NOT certified") << "\n";
  }
  return c.certified ? kExitOk : kExitFailed;
}

int cmd_frobenius(const Emitter& em, long p_raw) {
  Prime p(p_raw);
  const long pv = p.value();
  const LaurentPoly T = LaurentPoly::variable();
  RationalMap f1 = RationalMap::polynomial(pow(T, static_cast<unsigned>(pv)));
  RationalMap f2 = RationalMap::polynomial(pow(T, static_cast<unsigned>(pv)) - T);
  LaurentPoly shifted = pow(T - LaurentPoly::constant(Rational(1)), static_cast<unsigned>(pv)) + LaurentPoly::constant(Rational(1));
  RationalMap phi2 = RationalMap::polynomial(shifted);

  RHOutcome r1 = check_rh(closed_disc_morphism(f1, p));
  RHOutcome r2 = check_rh(closed_disc_morphism(f2, p));
  if (!r1.report || !r2.report) throw ConsistencyError("frobenius example failed validation");
  GermData g2 = germ_data(f2, TangentDirection{ProjQ::infinity(), Rational(0), Side::inside}, ProjQ::infinity(), p);
  CharPDivisor d1 = char_p_divisor(f1, {Rational(0)}, p);
  CharPDivisor d2 = char_p_divisor(phi2, {Rational(0), Rational(1)}, p);
  const bool ok = r1.report->balanced && r2.report->balanced && d1.certified && d2.certified;
  if (em.json) {
    em.emit(Json{{"p", pv},
                 {"f1", io::to_json(*r1.report)},
                 {"f2", io::to_json(*r2.report)},
                 {"f2_sigma_inf", g2.sigma},
                 {"divisor_phi1", io::to_json(d1)},
                 {"divisor_phi2", io::to_json(d2)}});
    return ok ? kExitOk : kExitFailed;
  }
  em.out << "p = " << pv << ", Y = X = closed unit disc\n";
  em.out << "f1 = " << format_map(f1) << ": " << balance_line(*r1.report) << "\n";
  em.out << "f2 = " << format_map(f2) << ": " << balance_line(*r2.report) << "   sigma(t_inf) = " << g2.sigma
         << ", nu(t_inf) = " << g2.nu << "\n";
  auto divisor = [&](const std::string& name, const RationalMap& f, const CharPDivisor& d) {
    em.out << "D(" << name << "), " << name << " = " << format_map(f) << ":";
    for (const auto& dir : d.local.directions) em.out << " " << direction_label(dir) << " " << dir.sigma;
    em.out << "   sum " << d.local.total << " = 2*" << d.local.degree << " - 2" << (d.certified ? ", certified" : ", NOT certified")
           << "\n";
  };
  divisor("phi1", f1, d1);
  divisor("phi2", phi2, d2);
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"berkrh: exact Riemann-Hurwitz checks for finite morphisms of Berkovich P^1 subdomains"};
  app.fallthrough();
  bool schema = false;
  bool json = false;
  app.add_flag("--schema", schema, "print the input and report schemas and exit");
  app.add_flag("--json", json, "machine-readable output");

  std::string poly_path, map_path, dir_path, domain_path, morphism_path, graph_path, hints_path;
  long p = 0;
  std::vector<std::string> range;

  auto* polygon = app.add_subcommand("polygon", "valuation polygon of a Laurent polynomial");
  polygon->add_option("--poly", poly_path, "polynomial file")->required();
  polygon->add_option("-p", p, "prime")->required();
  polygon->add_option("--range", range, "count root valuations in [s1, s2]")->expected(2);

  auto* annulus = app.add_subcommand("annulus", "germ invariants");
  auto* analyze = annulus->add_subcommand("analyze", "d, sigma, nu, v(eps) at a tangent direction");
  analyze->add_option("--map", map_path, "rational map file")->required();
  analyze->add_option("--dir", dir_path, "direction file")->required();
  analyze->add_option("-p", p, "prime")->required();
  annulus->require_subcommand(1);

  auto* euler = app.add_subcommand("euler", "Euler-Poincare characteristic of a domain");
  euler->add_option("--domain", domain_path, "domain file")->required();
  euler->add_option("-p", p, "prime used to check that the removed discs are disjoint");

  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz balance");
  auto* rh_check = rh->add_subcommand("check", "validate a morphism and check the balance");
  rh_check->add_option("--morphism", morphism_path, "morphism file")->required();
  rh->require_subcommand(1);

  auto* ledger = app.add_subcommand("ledger", "triangulation ledgers");
  auto* ledger_verify = ledger->add_subcommand("verify", "assemble global RH from local data");
  ledger_verify->add_option("--graph", graph_path, "graph file")->required();
  ledger->require_subcommand(1);

  auto* charp = app.add_subcommand("charp", "residue-direction divisor");
  auto* charp_divisor = charp->add_subcommand("divisor", "sigma per residue direction at the Gauss point");
  charp_divisor->add_option("--map", map_path, "rational map file")->required();
  charp_divisor->add_option("--hints", hints_path, "file with a list of hint centers");
  charp_divisor->add_option("-p", p, "prime")->required();
  charp->require_subcommand(1);

  auto* examples = app.add_subcommand("examples", "built-in worked examples");
  auto* frobenius = examples->add_subcommand("frobenius", "Frobenius lifts T^p and T^p - T");
  frobenius->add_option("-p", p, "prime")->required();
  examples->require_subcommand(1);

  for (auto* sub : {polygon, annulus, analyze, euler, rh, rh_check, ledger, ledger_verify, charp, charp_divisor, examples,
                    frobenius})
    sub->fallthrough();

  std::vector<std::string> argv_store{"berkrh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const Emitter em{json, out};
  try {
    if (schema) {
      out << io::schemas().dump(2) << "\n";
      return kExitOk;
    }
    if (*polygon) return cmd_polygon(em, poly_path, p, range);
    if (*analyze) return cmd_annulus(em, map_path, dir_path, p);
    if (*euler) return cmd_euler(em, domain_path, p);
    if (*rh_check) return cmd_rh(em, morphism_path);
    if (*ledger_verify) return cmd_ledger(em, graph_path);
    if (*charp_divisor) return cmd_charp(em, map_path, hints_path, p);
    if (*frobenius) return cmd_frobenius(em, p);
    err << app.help();
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConsistencyError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace berkrh
