#pragma once

// Valuation polygons: the lower convex hull of the points (i, v_p(c_i)) of a
// Laurent polynomial sum c_i T^i.
//
// Orientation: V(s) = min_i (v_i + i*s). A larger s means a smaller radius
// p^(-s), so "inside" a disc of log-radius s means parameters s' > s.

#include <optional>
#include <utility>
#include <vector>

#include "berkrh/exactval.hpp"
#include "berkrh/laurent.hpp"

namespace berkrh {

enum class Side { inside, outside };

struct PolygonPoint {
  long i;
  Rational v;
};

class ValPolygon {
 public:
  // Throws DegenerateInput for f == 0.
  ValPolygon(const LaurentPoly& f, const Prime& p);

  const std::vector<PolygonPoint>& points() const noexcept { return points_; }
  const std::vector<PolygonPoint>& hull() const noexcept { return hull_; }
  long ord_low() const noexcept { return hull_.front().i; }
  long ord_high() const noexcept { return hull_.back().i; }

  Rational eval(const Rational& s) const;
  std::pair<long, long> achieving_range(const Rational& s) const;

  // Root valuations, one per hull segment, in increasing order, with the
  // segment length as multiplicity.
  std::vector<std::pair<Rational, long>> breakpoints() const;

 private:
  std::vector<PolygonPoint> points_;
  std::vector<PolygonPoint> hull_;
};

// One end of a valuation interval; nullopt is -inf (low end) or +inf (high end).
struct ValBound {
  std::optional<Rational> value;
  bool inclusive = true;

  static ValBound unbounded() { return {}; }
  static ValBound closed(Rational v) { return {std::move(v), true}; }
  static ValBound open(Rational v) { return {std::move(v), false}; }
};

ValPolygon build_polygon(const LaurentPoly& f, const Prime& p);
ValQ eval_V(const ValPolygon& P, const Rational& s);
std::pair<long, long> achieving_range(const ValPolygon& P, const Rational& s);

// Roots x with x != 0, inf and v(x) in the interval, with multiplicity.
long count_zero_valuations(const ValPolygon& P, const ValBound& lo, const ValBound& hi);

// inside -> imin(s), outside -> imax(s).
long dominant_exponent(const ValPolygon& P, const Rational& s, Side side);

// No root with s_lo < v(x) < s_hi. Throws InputError unless s_lo < s_hi.
bool is_invertible_on(const ValPolygon& P, const Rational& s_lo, const Rational& s_hi);

}  // namespace berkrh
