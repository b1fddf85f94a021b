#pragma once

// Discs, type-2 points and finite-type subdomains of the Berkovich
// projective line, all in log-radius form.
//
// A disc centred at infinity with log-radius s is read in the coordinate
// U = 1/T: it is the disc of log-radius s around U = 0, i.e. the complement
// of the finite disc of log-radius -s around 0 with the opposite kind.

#include <string>
#include <vector>

#include "berkrh/exactval.hpp"
#include "berkrh/laurent.hpp"
#include "berkrh/valpolygon.hpp"

namespace berkrh {

enum class DiscKind { open, closed };

struct DiscSpec {
  ProjQ center;
  Rational log_radius;
  DiscKind kind = DiscKind::closed;
};

// eta_{a,s}. Centre infinity is normalised to eta_{0,-s}.
struct TypeTwoPoint {
  ProjQ center;
  Rational log_radius;
};

struct FtDomainP1 {
  std::vector<DiscSpec> removed_open;
  std::vector<DiscSpec> removed_closed;
  long genus = 0;

  std::vector<DiscSpec> removed() const;
  bool contains_infinity() const;
};

std::string to_string(DiscKind k);

TypeTwoPoint normalize_point(const TypeTwoPoint& x);
bool same_point(const TypeTwoPoint& x, const TypeTwoPoint& y, const Prime& p);

bool disc_contains(const DiscSpec& outer, const DiscSpec& inner, const Prime& p);
bool discs_disjoint(const DiscSpec& a, const DiscSpec& b, const Prime& p);
bool discs_equal(const DiscSpec& a, const DiscSpec& b, const Prime& p);

bool point_in_disc(const TypeTwoPoint& x, const DiscSpec& D, const Prime& p);
bool point_in_disc(const ProjQ& x, const DiscSpec& D, const Prime& p);

// Kinds must match the list they are in; discs pairwise disjoint; the
// complement nonempty. Throws InputError otherwise.
FtDomainP1 domain_validate(const FtDomainP1& Y, const Prime& p);

long euler_char(const FtDomainP1& Y);

ValQ vnorm_at_point(const LaurentPoly& f, const TypeTwoPoint& x, const Prime& p);
ValQ vnorm_at_point(const RationalMap& f, const TypeTwoPoint& x, const Prime& p);

bool point_in_domain(const TypeTwoPoint& x, const FtDomainP1& Y, const Prime& p);
bool point_in_domain(const ProjQ& x, const FtDomainP1& Y, const Prime& p);

struct SkeletonProbe {
  long d;
  ValQ image_log_radius;
};

// Throws DegenerateInput for constant maps or when s is a breakpoint of the
// numerator or denominator polygon (no single dominant exponent there).
SkeletonProbe skeleton_image_probe(const RationalMap& phi, const Rational& a, const Rational& s, const Prime& p);

// Zeros of the polynomial f, with multiplicity, at finite points of D.
long count_zeros_in_disc(const LaurentPoly& f, const DiscSpec& D, const Prime& p);
// Zeros of the polynomial f at finite points of Y.
long count_zeros_in_domain(const LaurentPoly& f, const FtDomainP1& Y, const Prime& p);

}  // namespace berkrh
