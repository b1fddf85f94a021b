#include "berkrh/valpolygon.hpp"

#include "berkrh/errors.hpp"

namespace berkrh {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below ac.
Rational turn(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
  return Rational(b.i - a.i) * (c.v - a.v) - (b.v - a.v) * Rational(c.i - a.i);
}

}  // namespace

ValPolygon::ValPolygon(const LaurentPoly& f, const Prime& p) {
  if (f.is_zero()) throw DegenerateInput("valuation polygon of the zero polynomial");
  for (const auto& [e, c] : f.terms()) points_.push_back({e, padic_val(c, p).value()});
  // points_ is already sorted by exponent (map order); monotone chain.
  for (const auto& pt : points_) {
    while (hull_.size() >= 2 && turn(hull_[hull_.size() - 2], hull_.back(), pt) <= 0) hull_.pop_back();
    hull_.push_back(pt);
  }
}

Rational ValPolygon::eval(const Rational& s) const {
  Rational best = hull_.front().v + Rational(hull_.front().i) * s;
  for (const auto& pt : hull_) {
    Rational val = pt.v + Rational(pt.i) * s;
    if (val < best) best = val;
  }
  return best;
}

std::pair<long, long> ValPolygon::achieving_range(const Rational& s) const {
  const Rational best = eval(s);
  long lo = 0;
  long hi = 0;
  bool found = false;
  for (const auto& pt : hull_) {
    if (pt.v + Rational(pt.i) * s != best) continue;
    if (!found) lo = pt.i;
    hi = pt.i;
    found = true;
  }
  return {lo, hi};
}

std::vector<std::pair<Rational, long>> ValPolygon::breakpoints() const {
  std::vector<std::pair<Rational, long>> out;
  // Slopes increase left to right, so root valuations -slope decrease; emit reversed.
  for (std::size_t k = hull_.size(); k-- > 1;) {
    const auto& a = hull_[k - 1];
    const auto& b = hull_[k];
    Rational slope = (b.v - a.v) / Rational(b.i - a.i);
    out.emplace_back(Rational(-slope), b.i - a.i);
  }
  return out;
}

ValPolygon build_polygon(const LaurentPoly& f, const Prime& p) { return ValPolygon(f, p); }

ValQ eval_V(const ValPolygon& P, const Rational& s) { return ValQ(P.eval(s)); }

std::pair<long, long> achieving_range(const ValPolygon& P, const Rational& s) { return P.achieving_range(s); }

long count_zero_valuations(const ValPolygon& P, const ValBound& lo, const ValBound& hi) {
  long n = 0;
  for (const auto& [r, mult] : P.breakpoints()) {
    if (lo.value && (r < *lo.value || (r == *lo.value && !lo.inclusive))) continue;
    if (hi.value && (r > *hi.value || (r == *hi.value && !hi.inclusive))) continue;
    n += mult;
  }
  return n;
}

long dominant_exponent(const ValPolygon& P, const Rational& s, Side side) {
  auto [lo, hi] = P.achieving_range(s);
  return side == Side::inside ? lo : hi;
}

bool is_invertible_on(const ValPolygon& P, const Rational& s_lo, const Rational& s_hi) {
  if (!(s_lo < s_hi)) throw InputError("is_invertible_on: need s_lo < s_hi");
  return count_zero_valuations(P, ValBound::open(s_lo), ValBound::open(s_hi)) == 0;
}

}  // namespace berkrh
