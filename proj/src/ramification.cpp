#include "berkrh/ramification.hpp"

#include <algorithm>

#include "berkrh/errors.hpp"

namespace berkrh {

RawGerm raw_germ(const RationalMap& phi, const TangentDirection& dir, const ProjQ& image_center, const Prime& p) {
  if (phi.is_constant()) throw DegenerateInput("germ of a constant map");
  RationalMap G = sub_const(recenter_source(phi, dir.center), image_center);
  const LaurentPoly& P = G.num();
  const LaurentPoly& Q = G.den();
  LaurentPoly W = wronskian(G);
  ValPolygon vp = build_polygon(P, p);
  ValPolygon vq = build_polygon(Q, p);
  ValPolygon vw = build_polygon(W, p);
  const Rational& s0 = dir.log_radius;
  const long ep = dominant_exponent(vp, s0, dir.side);
  const long eq = dominant_exponent(vq, s0, dir.side);
  const long ew = dominant_exponent(vw, s0, dir.side);
  // v(G') - v(G) + s0 on the boundary circle: G' = W / Q^2.
  Rational eps = vw.eval(s0) - vq.eval(s0) - vp.eval(s0) + s0;
  return {ep - eq, ew - 2 * eq, eps};
}

GermData germ_data(const RationalMap& phi, const TangentDirection& dir, const ProjQ& image_center, const Prime& p) {
  RawGerm r = raw_germ(phi, dir, image_center, p);
  if (r.d < 1)
    throw ConsistencyError("germ degree " + std::to_string(r.d) + " < 1 at direction (" + to_string(dir.center) +
                           ", " + to_string(dir.log_radius) + "): wrong image center or orientation");
  GermData g;
  g.d = r.d;
  g.sigma = dir.side == Side::inside ? r.sigma : -r.sigma + 2 * r.d - 2;
  g.nu = g.sigma - g.d + 1;
  g.eps_val = ValQ(r.eps_val);
  ValQ bound = padic_val(Rational(g.d), p);
  if (g.eps_val > bound)
    throw ConsistencyError("|eps| < |d| at direction (" + to_string(dir.center) + ", " + to_string(dir.log_radius) +
                           "): eps_val " + to_string(g.eps_val) + " exceeds v_p(d) " + to_string(bound));
  return g;
}

GermData invert_germ(const GermData& g, const Rational& s0) {
  GermData h;
  h.d = g.d;
  h.sigma = -g.sigma + 2 * g.d - 2;
  h.nu = -g.nu;
  h.eps_val = ValQ(Rational(g.eps_val.value() + Rational(g.nu) * s0));
  return h;
}

GermData compose_germ(const GermData& g_phi, const GermData& g_psi) {
  GermData h;
  h.d = g_phi.d * g_psi.d;
  h.sigma = g_phi.d * g_psi.sigma + g_phi.sigma;
  h.nu = g_phi.d * g_psi.nu + g_phi.nu;
  h.eps_val = g_phi.eps_val + g_psi.eps_val;
  return h;
}

ValQ different_value(const GermData& g, const Rational& s) {
  return ValQ(Rational(g.eps_val.value() + Rational(g.nu) * s));
}

ValQ discriminant_value(const GermData& g, const Rational& s, const Prime& p) {
  if (g.nu == 0) return ValQ(Rational(Rational(g.d) * padic_val(Rational(g.d), p).value()));
  return ValQ(Rational(Rational(g.d) * different_value(g, s).value()));
}

long critical_order_at_infinity(const RationalMap& phi) {
  return wronskian(recenter_source(phi, ProjQ::infinity())).ord_low();
}

long count_critical(const RationalMap& phi, const FtDomainP1& Y, const Prime& p) {
  long n = count_zeros_in_domain(wronskian(phi), Y, p);
  if (Y.contains_infinity()) n += critical_order_at_infinity(phi);
  return n;
}

long fibre_count(const RationalMap& phi, const FtDomainP1& Y, const ProjQ& c, const Prime& p) {
  if (phi.is_constant()) throw DegenerateInput("fibre of a constant map");
  const LaurentPoly& A = phi.num();
  const LaurentPoly& B = phi.den();
  if (c.is_inf()) {
    long n = count_zeros_in_domain(B, Y, p);
    if (Y.contains_infinity()) n += std::max(0L, A.degree() - B.degree());
    return n;
  }
  LaurentPoly N = A - B * c.value();
  long n = count_zeros_in_domain(N, Y, p);
  if (Y.contains_infinity()) n += std::max(0L, B.degree() - N.degree());
  return n;
}

long degree_over(const RationalMap& phi, const FtDomainP1& Y, const std::vector<ProjQ>& probes, const Prime& p) {
  if (probes.empty()) throw InputError("degree_over: no probes");
  long deg = fibre_count(phi, Y, probes.front(), p);
  for (const auto& c : probes) {
    long n = fibre_count(phi, Y, c, p);
    if (n != deg)
      throw InputError("degree_over: probe " + to_string(c) + " gives " + std::to_string(n) + " preimages, probe " +
                       to_string(probes.front()) + " gives " + std::to_string(deg));
  }
  return deg;
}

std::string to_string(SumStatus s) { return s == SumStatus::verified ? "VERIFIED" : "INCOMPLETE"; }

namespace {

struct DirCounts {
  long crit;   // zeros of the Wronskian, e_P - 1 at infinity
  long poles;  // poles of phi
  long zeros;  // zeros of phi - b*
};

// Finite zeros of f outside the closed disc D(a, s), plus an order at infinity.
long outside_count(const LaurentPoly& f, const Rational& a, const Rational& s, long at_inf, const Prime& p) {
  return f.degree() - count_zeros_in_disc(f, DiscSpec{ProjQ(a), s, DiscKind::closed}, p) + at_inf;
}

}  // namespace

LocalSumReport local_sum_check(const RationalMap& phi, const TypeTwoPoint& x, const std::vector<Rational>& hint_centers,
                               const Prime& p) {
  if (phi.is_constant()) throw DegenerateInput("local_sum_check: constant map");
  const TypeTwoPoint y = normalize_point(x);
  const Rational a = y.center.value();
  const Rational s = y.log_radius;

  // Residue classes with rational representatives, then the hints.
  std::vector<std::pair<Rational, bool>> classes;
  if (s.get_den() == 1) {
    const Rational step = prime_power(p, s.get_num().get_si());
    for (long k = 0; k < p.value(); ++k) classes.emplace_back(Rational(a + Rational(k) * step), false);
  } else {
    classes.emplace_back(a, false);
  }
  for (const auto& h : hint_centers) {
    if (padic_val(Rational(h - a), p) < ValQ(s)) continue;  // lies in the infinity direction
    bool found = false;
    for (auto& [c, hinted] : classes)
      if (padic_val(Rational(h - c), p) > ValQ(s)) {
        hinted = true;
        found = true;
      }
    if (!found) classes.emplace_back(h, true);
  }

  // b*: the candidate image centre with the largest v(phi - b) at x.
  std::vector<Rational> candidates{Rational(0)};
  auto add_candidate = [&](const Rational& c) {
    ProjQ v = phi.eval(ProjQ(c));
    if (v.is_finite()) candidates.push_back(v.value());
  };
  add_candidate(a);
  for (const auto& [c, hinted] : classes) add_candidate(c);
  Rational bstar = candidates.front();
  ValQ vstar = vnorm_at_point(sub_const(phi, ProjQ(bstar)), y, p);
  for (const auto& b : candidates) {
    ValQ v = vnorm_at_point(sub_const(phi, ProjQ(b)), y, p);
    if (v > vstar) {
      vstar = v;
      bstar = b;
    }
  }
  if (vstar.is_inf()) throw DegenerateInput("local_sum_check: constant map");

  const LaurentPoly& A = phi.num();
  const LaurentPoly& B = phi.den();
  const LaurentPoly W = wronskian(phi);
  const LaurentPoly N = A - B * bstar;

  std::vector<std::pair<TangentDirection, std::pair<DirCounts, bool>>> all;
  for (const auto& [c, hinted] : classes) {
    DiscSpec D{ProjQ(c), s, DiscKind::open};
    all.push_back({TangentDirection{ProjQ(c), s, Side::inside},
                   {DirCounts{count_zeros_in_disc(W, D, p), count_zeros_in_disc(B, D, p), count_zeros_in_disc(N, D, p)},
                    hinted}});
  }
  {
    DirCounts inf{outside_count(W, a, s, critical_order_at_infinity(phi), p),
                  outside_count(B, a, s, std::max(0L, A.degree() - B.degree()), p),
                  outside_count(N, a, s, std::max(0L, B.degree() - N.degree()), p)};
    all.push_back({TangentDirection{ProjQ(a), s, Side::outside}, {inf, false}});
  }

  LocalSumReport rep;
  rep.point = y;
  rep.image_center = ProjQ(bstar);
  rep.image_log_radius = vstar.value();
  long pos = 0;
  long neg = 0;
  long zeros = 0;
  long poles = 0;
  for (const auto& [dir, info] : all) {
    const auto& [cnt, hinted] = info;
    const long slope = cnt.zeros - cnt.poles;
    const long sigma = slope >= 0 ? cnt.crit - 2 * cnt.poles : cnt.crit - 2 * cnt.zeros;
    // Second route: the same sigma from the germ polygons.
    RawGerm r = slope >= 0 ? raw_germ(phi, dir, ProjQ(bstar), p)
                           : raw_germ(sub_const(phi, ProjQ(bstar)), dir, ProjQ::infinity(), p);
    const long sigma_germ = dir.side == Side::inside ? r.sigma : -r.sigma - 2;
    if (sigma_germ != sigma)
      throw ConsistencyError("local_sum_check: sigma " + std::to_string(sigma) + " by counting vs " +
                             std::to_string(sigma_germ) + " from the germ at " + to_string(dir.center));
    (slope > 0 ? pos : neg) += slope > 0 ? slope : -slope;
    zeros += cnt.zeros;
    poles += cnt.poles;
    rep.total += sigma;
    if (sigma != 0 || hinted || dir.side == Side::outside) rep.directions.push_back({dir, sigma, slope, hinted});
  }
  // Positive and negative slopes each sum to deg(phi, x) over all directions;
  // over an enumerated subset each sum is a lower bound.
  rep.degree = std::max(pos, neg);
  rep.expected = 2 * rep.degree - 2;
  rep.zeros_accounted = zeros == phi.degree() && poles == phi.degree();
  rep.status = rep.total == rep.expected ? SumStatus::verified : SumStatus::incomplete;
  std::stable_sort(rep.directions.begin(), rep.directions.end(), [](const DirectionSigma& u, const DirectionSigma& v) {
    if (u.dir.side != v.dir.side) return u.dir.side == Side::inside;
    return u.dir.center < v.dir.center;
  });
  return rep;
}

}  // namespace berkrh
