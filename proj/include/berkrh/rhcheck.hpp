#pragma once

// Riemann-Hurwitz balance for a finite morphism Y -> X of P^1 subdomains:
//   chi(Y) = deg * chi(X) - sum (e_P - 1) - sum_{TY} nu + sum_{T_in} nu

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berkrh/berkdomain.hpp"
#include "berkrh/ramification.hpp"

namespace berkrh {

struct MorphismSpec {
  RationalMap map = RationalMap::identity();
  FtDomainP1 domain;
  FtDomainP1 codomain;
  // Removed disc of the domain -> removed disc of the codomain, keyed by
  // canonical centre strings ("inf" for infinity).
  std::map<std::string, std::string> direction_images;
  Prime p{2};
  // Points of X used for fibre counts; chosen automatically when empty.
  std::vector<ProjQ> probes;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct Diagnostics {
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct NuTerm {
  ProjQ center;
  Rational log_radius;
  long nu;
};

struct RHReport {
  long chi_Y = 0;
  long chi_X = 0;
  long deg = 0;
  long ram_sum = 0;
  std::vector<NuTerm> nu_out;  // TY, subtracted
  std::vector<NuTerm> nu_in;   // T_in, added
  long lhs = 0;
  long rhs = 0;
  bool balanced = false;
};

// Sorts by centre (infinity last), then log-radius, and fills rhs/balanced.
void finalize_report(RHReport& r);

// Automatic fibre probes: small rationals lying in X.
std::vector<ProjQ> default_probes(const FtDomainP1& X, const Prime& p);

Diagnostics validate_morphism(const MorphismSpec& M);

struct RHOutcome {
  Diagnostics validation;
  std::optional<RHReport> report;  // absent when validation failed
};

RHOutcome check_rh(const MorphismSpec& M);

struct SigmaChiReport {
  long sigma = 0;
  long chi_U = 1;
  long ram_in_disc = 0;
  bool hypothesis_ok = false;  // phi has no pole (in the image coordinate) on the disc
  bool equal = false;
};

// sigma of the germ into an open disc U versus chi(U) - 1 + sum_{P in U}(e_P - 1).
SigmaChiReport sigma_vs_chi(const RationalMap& phi, const DiscSpec& disc, const ProjQ& image_center, const Prime& p);

struct CharPDivisor {
  LocalSumReport local;
  long reduction_degree = 0;  // fibre degree over the closed unit disc
  bool certified = false;     // local sum verified and degrees agree
};

// Residue-direction sigmas of a map with good reduction at the Gauss point.
// Throws InputError if the Gauss point is not fixed.
CharPDivisor char_p_divisor(const RationalMap& phi, const std::vector<Rational>& hint_centers, const Prime& p);

std::string center_key(const ProjQ& c);

}  // namespace berkrh
