#pragma once

// Germ invariants of a rational map at a tangent direction, classical
// ramification counts and fibre degrees.
//
// For a germ with source coordinate T (recentred at the direction's centre)
// and image coordinate S = G(T):
//   d     dominant exponent of G
//   sigma dominant exponent of dS/dT
//   nu    sigma - d + 1
//   eps   valuation of dS1/dT1 on the boundary circle, where S1, T1 are the
//         coordinates rescaled to make that circle the unit circle.
// Outside germs are reported in the inverted orientation (T1 = r/T,
// S1 = r'/S), so the identity map always has sigma = 0.

#include <string>
#include <vector>

#include "berkrh/berkdomain.hpp"
#include "berkrh/exactval.hpp"
#include "berkrh/laurent.hpp"
#include "berkrh/valpolygon.hpp"

namespace berkrh {

struct TangentDirection {
  ProjQ center;
  Rational log_radius;
  Side side = Side::inside;
};

struct GermData {
  long d = 1;
  long sigma = 0;
  long nu = 0;
  ValQ eps_val = ValQ(0L);

  friend bool operator==(const GermData& a, const GermData& b) {
    return a.d == b.d && a.sigma == b.sigma && a.nu == b.nu && a.eps_val == b.eps_val;
  }
};

// Exponents read straight off the polygons of G and G' on the germ, without
// the outside reorientation and without sanity checks.
struct RawGerm {
  long d;
  long sigma;
  Rational eps_val;
};

RawGerm raw_germ(const RationalMap& phi, const TangentDirection& dir, const ProjQ& image_center, const Prime& p);

// Throws ConsistencyError when d < 1 (wrong image centre or orientation) or
// when eps_val > v_p(d).
GermData germ_data(const RationalMap& phi, const TangentDirection& dir, const ProjQ& image_center, const Prime& p);

// Germ at the far end of an annulus of log-width s0 (the inversion
// T1 = r/T with v(r) = s0).
GermData invert_germ(const GermData& g, const Rational& s0);

// Germ of psi o phi.
GermData compose_germ(const GermData& g_phi, const GermData& g_psi);

ValQ different_value(const GermData& g, const Rational& s);
ValQ discriminant_value(const GermData& g, const Rational& s, const Prime& p);

// Order of vanishing at T = inf of the Wronskian, i.e. e_inf - 1.
long critical_order_at_infinity(const RationalMap& phi);

// sum_{P in Y(k)} (e_P - 1).
long count_critical(const RationalMap& phi, const FtDomainP1& Y, const Prime& p);

// Zeros of phi - c (poles for c = inf) in Y with multiplicity.
long fibre_count(const RationalMap& phi, const FtDomainP1& Y, const ProjQ& c, const Prime& p);

// Common fibre_count over the probes. Throws InputError if the probes
// disagree or the list is empty.
long degree_over(const RationalMap& phi, const FtDomainP1& Y, const std::vector<ProjQ>& probes, const Prime& p);

enum class SumStatus { verified, incomplete };

struct DirectionSigma {
  TangentDirection dir;
  long sigma;
  long slope;  // slope of v(phi - b*) into the direction
  bool hinted;
};

struct LocalSumReport {
  TypeTwoPoint point;
  ProjQ image_center;          // b*
  Rational image_log_radius;   // V* = v(phi - b*) at the point
  std::vector<DirectionSigma> directions;
  long degree = 0;             // deg(phi, x)
  long total = 0;
  long expected = 0;
  bool zeros_accounted = false;
  SumStatus status = SumStatus::incomplete;
};

std::string to_string(SumStatus s);

LocalSumReport local_sum_check(const RationalMap& phi, const TypeTwoPoint& x, const std::vector<Rational>& hint_centers,
                               const Prime& p);

}  // namespace berkrh
