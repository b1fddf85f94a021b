#include "berkrh/rhcheck.hpp"

#include <algorithm>

#include "berkrh/errors.hpp"

namespace berkrh {

std::string center_key(const ProjQ& c) { return to_string(c); }

bool Diagnostics::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void finalize_report(RHReport& r) {
  auto order = [](const NuTerm& a, const NuTerm& b) {
    if (!(a.center == b.center)) return a.center < b.center;
    return a.log_radius < b.log_radius;
  };
  std::sort(r.nu_out.begin(), r.nu_out.end(), order);
  std::sort(r.nu_in.begin(), r.nu_in.end(), order);
  r.rhs = r.deg * r.chi_X - r.ram_sum;
  for (const auto& t : r.nu_out) r.rhs -= t.nu;
  for (const auto& t : r.nu_in) r.rhs += t.nu;
  r.balanced = r.lhs == r.rhs;
}

std::vector<ProjQ> default_probes(const FtDomainP1& X, const Prime& p) {
  const Rational pr(p.value());
  std::vector<ProjQ> candidates{ProjQ(0L), ProjQ(1L), ProjQ(-1L), ProjQ(2L), ProjQ(Rational(1, 2)), ProjQ(pr),
                                ProjQ(Rational(Rational(1) / pr))};
  for (long k = 2; k <= 6; ++k) {
    candidates.emplace_back(prime_power(p, k));
    candidates.emplace_back(prime_power(p, -k));
  }
  candidates.push_back(ProjQ::infinity());
  std::vector<ProjQ> out;
  for (const auto& c : candidates) {
    if (out.size() == 3) break;
    if (point_in_domain(c, X, p)) out.push_back(c);
  }
  if (out.empty()) throw InputError("probes: no automatic probe lies in the codomain; supply \"probes\"");
  return out;
}

namespace {

Side side_of(const DiscSpec& D) { return D.kind == DiscKind::open ? Side::inside : Side::outside; }

const DiscSpec* find_disc(const std::vector<DiscSpec>& discs, const std::string& key) {
  for (const auto& D : discs)
    if (center_key(D.center) == key) return &D;
  return nullptr;
}

}  // namespace

Diagnostics validate_morphism(const MorphismSpec& M) {
  const Prime& p = M.p;
  domain_validate(M.domain, p);
  domain_validate(M.codomain, p);
  Diagnostics diag;
  auto record = [&](std::string name, bool passed, std::string detail) {
    diag.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  long deg = 0;
  try {
    deg = degree_over(M.map, M.domain, M.probes.empty() ? default_probes(M.codomain, p) : M.probes, p);
    record("fibre_degree", true, "deg = " + std::to_string(deg));
  } catch (const InputError& e) {
    record("fibre_degree", false, e.what());
  }

  const auto source = M.domain.removed();
  const auto target = M.codomain.removed();
  std::map<std::string, long> degree_into;
  for (const auto& E : target) degree_into[center_key(E.center)] = 0;

  for (const auto& [key, value] : M.direction_images)
    if (!find_disc(source, key)) record("direction_images[" + key + "]", false, "no removed disc of the domain has this center");

  for (const auto& D : source) {
    const std::string key = center_key(D.center);
    const std::string tag = "direction " + key;
    auto it = M.direction_images.find(key);
    if (it == M.direction_images.end()) {
      record(tag + " assignment", false, "missing from direction_images");
      continue;
    }
    const DiscSpec* E = find_disc(target, it->second);
    if (!E) {
      record(tag + " assignment", false, "image " + it->second + " is not a removed disc of the codomain");
      continue;
    }
    ValQ v = vnorm_at_point(sub_const(M.map, E->center), TypeTwoPoint{D.center, D.log_radius}, p);
    record(tag + " boundary", v == ValQ(E->log_radius),
           "v(phi - " + it->second + ") = " + to_string(v) + " at the boundary, image log_radius " +
               to_string(E->log_radius));
    record(tag + " kind", D.kind == E->kind, to_string(D.kind) + " -> " + to_string(E->kind));
    try {
      GermData g = germ_data(M.map, TangentDirection{D.center, D.log_radius, side_of(D)}, E->center, p);
      record(tag + " germ_degree", true, "d = " + std::to_string(g.d));
      degree_into[it->second] += g.d;
    } catch (const ConsistencyError& e) {
      record(tag + " germ_degree", false, e.what());
    }
  }
  for (const auto& [key, total] : degree_into)
    record("partition " + key, total == deg,
           "sum of d over preimage directions = " + std::to_string(total) + ", deg = " + std::to_string(deg));
  return diag;
}

RHOutcome check_rh(const MorphismSpec& M) {
  RHOutcome out;
  out.validation = validate_morphism(M);
  if (!out.validation.ok()) return out;
  const Prime& p = M.p;
  RHReport r;
  r.chi_Y = euler_char(M.domain);
  r.chi_X = euler_char(M.codomain);
  r.deg = degree_over(M.map, M.domain, M.probes.empty() ? default_probes(M.codomain, p) : M.probes, p);
  r.ram_sum = count_critical(M.map, M.domain, p);
  const auto target = M.codomain.removed();
  auto nu_of = [&](const DiscSpec& D) {
    const DiscSpec* E = find_disc(target, M.direction_images.at(center_key(D.center)));
    GermData g = germ_data(M.map, TangentDirection{D.center, D.log_radius, side_of(D)}, E->center, p);
    return NuTerm{D.center, D.log_radius, g.nu};
  };
  for (const auto& D : M.domain.removed_open) r.nu_out.push_back(nu_of(D));
  for (const auto& D : M.domain.removed_closed) r.nu_in.push_back(nu_of(D));
  r.lhs = r.chi_Y;
  finalize_report(r);
  out.report = r;
  return out;
}

SigmaChiReport sigma_vs_chi(const RationalMap& phi, const DiscSpec& disc, const ProjQ& image_center, const Prime& p) {
  if (disc.kind != DiscKind::open) throw InputError("sigma_vs_chi: the removed disc must be open");
  SigmaChiReport r;
  r.chi_U = 1;
  r.ram_in_disc = count_zeros_in_disc(wronskian(phi), disc, p);
  if (disc.center.is_inf()) r.ram_in_disc += critical_order_at_infinity(phi);

  RationalMap G = sub_const(phi, image_center);
  long poles = count_zeros_in_disc(G.den(), disc, p);
  if (disc.center.is_inf()) poles += std::max(0L, G.num().degree() - G.den().degree());
  r.hypothesis_ok = poles == 0;
  try {
    r.sigma = germ_data(phi, TangentDirection{disc.center, disc.log_radius, Side::inside}, image_center, p).sigma;
  } catch (const ConsistencyError&) {
    r.hypothesis_ok = false;
    return r;
  }
  r.equal = r.sigma == r.chi_U - 1 + r.ram_in_disc;
  return r;
}

CharPDivisor char_p_divisor(const RationalMap& phi, const std::vector<Rational>& hint_centers, const Prime& p) {
  const TypeTwoPoint gauss{ProjQ(0L), Rational(0)};
  if (vnorm_at_point(phi, gauss, p) != ValQ(0L))
    throw InputError("map: |phi| at the Gauss point is not 1, so the Gauss point is not fixed");
  CharPDivisor out;
  out.local = local_sum_check(phi, gauss, hint_centers, p);
  if (out.local.image_log_radius != 0 || padic_val(out.local.image_center.value(), p) < ValQ(0L))
    throw InputError("map: the Gauss point is not fixed (image log-radius " + to_string(out.local.image_log_radius) +
                     ")");
  FtDomainP1 unit_disc;
  unit_disc.removed_open.push_back(DiscSpec{ProjQ::infinity(), Rational(0), DiscKind::open});
  out.reduction_degree = degree_over(phi, unit_disc, {ProjQ(0L), ProjQ(1L)}, p);
  out.certified = out.local.status == SumStatus::verified && out.local.degree == out.reduction_degree;
  return out;
}

}  // namespace berkrh
