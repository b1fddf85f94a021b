#include "doctest.h"

#include <map>

#include "../oracles.hpp"
#include "berkrh/errors.hpp"
#include "berkrh/valpolygon.hpp"

using namespace berkrh;

namespace {

const LaurentPoly T = LaurentPoly::variable();
LaurentPoly C(long c) { return LaurentPoly::constant(Rational(c)); }
const Prime P5(5);

ValPolygon f2_poly() { return build_polygon(pow(T, 5) - T, P5); }
ValPolygon df2_poly() { return build_polygon(C(5) * pow(T, 4) - C(1), P5); }

}  // namespace

TEST_CASE("hull vertices") {
  auto P = f2_poly();
  REQUIRE(P.hull().size() == 2);
  CHECK(P.hull()[0].i == 1);
  CHECK(P.hull()[1].i == 5);
  auto Q = df2_poly();
  REQUIRE(Q.hull().size() == 2);
  CHECK(Q.hull()[1].v == 1);
  auto R = build_polygon(C(25) * pow(T, 2) + C(5) * T + C(1), P5);
  CHECK(R.points().size() == 3);
  REQUIRE(R.hull().size() == 2);
  CHECK(R.hull()[1].i == 2);
  CHECK(R.hull()[1].v == 2);
  CHECK_THROWS_AS(build_polygon(LaurentPoly(), P5), DegenerateInput);
}

TEST_CASE("eval_V") {
  CHECK(eval_V(f2_poly(), Rational(0)) == ValQ(0L));
  CHECK(eval_V(f2_poly(), Rational(1)) == ValQ(1L));
  CHECK(eval_V(df2_poly(), Rational(-1, 4)) == ValQ(0L));
}

TEST_CASE("achieving_range") {
  CHECK(achieving_range(df2_poly(), Rational(-1, 4)) == std::pair<long, long>{0, 4});
  CHECK(achieving_range(df2_poly(), Rational(0)) == std::pair<long, long>{0, 0});
  CHECK(achieving_range(f2_poly(), Rational(0)) == std::pair<long, long>{1, 5});
}

TEST_CASE("count_zero_valuations") {
  auto Q = df2_poly();
  CHECK(count_zero_valuations(Q, ValBound::closed(Rational(-1, 4)), ValBound::closed(Rational(-1, 4))) == 4);
  CHECK(count_zero_valuations(Q, ValBound::open(Rational(0)), ValBound::unbounded()) == 0);
  CHECK(count_zero_valuations(Q, ValBound::unbounded(), ValBound::open(Rational(-1, 4))) == 0);
  CHECK(count_zero_valuations(Q, ValBound::unbounded(), ValBound::unbounded()) == 4);
  auto cubic = oracle::to_poly(oracle::expand_roots(Rational(1), {Rational(1), Rational(5), Rational(1, 5)}));
  CHECK(count_zero_valuations(build_polygon(cubic, P5), ValBound::closed(Rational(0)), ValBound::closed(Rational(1))) == 2);
  // T^3 (T - 5): the root at 0 never counts.
  CHECK(count_zero_valuations(build_polygon(pow(T, 3) * (T - C(5)), P5), ValBound::unbounded(), ValBound::unbounded()) == 1);
}

TEST_CASE("dominant_exponent") {
  auto Q = df2_poly();
  CHECK(dominant_exponent(Q, Rational(0), Side::inside) == 0);
  CHECK(dominant_exponent(Q, Rational(-1, 4), Side::outside) == 4);
  CHECK(dominant_exponent(Q, Rational(-1, 4), Side::inside) == 0);
  CHECK(dominant_exponent(build_polygon(C(5) * pow(T, 4), P5), Rational(0), Side::inside) == 4);
}

TEST_CASE("is_invertible_on") {
  auto Q = df2_poly();
  CHECK(is_invertible_on(Q, Rational(0), Rational(1, 8)));
  CHECK_FALSE(is_invertible_on(Q, Rational(-1, 2), Rational(0)));
  CHECK(is_invertible_on(build_polygon(pow(T, 7), P5), Rational(-3), Rational(9)));
  CHECK_THROWS_AS(is_invertible_on(Q, Rational(1), Rational(1)), InputError);
}

TEST_CASE("breakpoints against known roots") {
  oracle::Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    long p = std::vector<long>{2, 3, 5, 7}[rng.uniform(0, 3)];
    std::vector<Rational> roots;
    for (long j = 0; j < rng.uniform(1, 6); ++j) roots.push_back(rng.small_rational(p, false));
    auto coef = oracle::expand_roots(rng.small_rational(p, false), roots);
    auto P = build_polygon(oracle::to_poly(coef), Prime(p));
    std::map<Rational, long> expect;
    for (const auto& r : roots) ++expect[oracle::val_or(r, p, Rational(0))];
    std::map<Rational, long> got;
    for (const auto& [s, m] : P.breakpoints()) got[s] += m;
    CHECK(got == expect);
  }
}
