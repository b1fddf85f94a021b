#pragma once

// Laurent polynomials and reduced rational maps with exact rational
// coefficients. These are the coordinate forms S = phi(T) of every morphism
// the analyzer handles.

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "berkrh/exactval.hpp"

namespace berkrh {

class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  LaurentPoly(std::initializer_list<std::pair<const long, Rational>> terms);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, long exponent);
  static LaurentPoly variable() { return monomial(Rational(1), 1); }
  // c * prod (T - r_j)
  static LaurentPoly from_roots(const Rational& c, const std::vector<Rational>& roots);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_polynomial() const noexcept;
  bool is_constant() const noexcept;

  // Lowest / highest stored exponent. Throw on the zero polynomial.
  long ord_low() const;
  long ord_high() const;
  // Degree of a polynomial; -1 for zero.
  long degree() const;

  Rational coeff(long exponent) const;
  Rational leading_coeff() const;
  const Terms& terms() const noexcept { return terms_; }

  // Throws DegenerateInput when x == 0 and negative exponents are present.
  Rational eval(const Rational& x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(long e, const Rational& c);
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& f, unsigned n);

LaurentPoly derivative(const LaurentPoly& f);

// g(T) = f(a + T). f must be a polynomial.
LaurentPoly taylor_shift(const LaurentPoly& f, const Rational& a);

// Exponent map i -> -i, i.e. f(1/T).
LaurentPoly invert_coordinate(const LaurentPoly& f);

// T^n f(1/T) for a polynomial f of degree <= n.
LaurentPoly reverse(const LaurentPoly& f, long n);

// f(g(T)) for polynomials f, g.
LaurentPoly compose(const LaurentPoly& f, const LaurentPoly& g);

// Euclidean division of polynomials over Q: a = q*b + r, deg r < deg b.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
// Monic gcd of polynomials (zero only if both are zero).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// A / B with A, B polynomials, gcd(A, B) = 1 and B monic.
class RationalMap {
 public:
  RationalMap(LaurentPoly num, LaurentPoly den);
  static RationalMap polynomial(LaurentPoly f) { return RationalMap(std::move(f), LaurentPoly::constant(Rational(1))); }
  static RationalMap identity() { return polynomial(LaurentPoly::variable()); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  // max(deg num, deg den); the degree of the morphism P^1 -> P^1.
  long degree() const;
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() <= 0; }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  ProjQ eval(const ProjQ& x) const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// A'B - AB' for Phi = A/B. Throws DegenerateInput when zero (constant map).
LaurentPoly wronskian(const RationalMap& phi);

// Phi - c, or 1/Phi when c is infinity.
RationalMap sub_const(const RationalMap& phi, const ProjQ& c);

// outer(inner(T)).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

// Phi written in a coordinate centred at c: Phi(c + T), or Phi(1/T) for c = inf.
RationalMap recenter_source(const RationalMap& phi, const ProjQ& c);

// Order of vanishing at T = infinity of a reduced map (pole orders count as
// zero here; use sub_const(phi, inf) for those).
long order_at_infinity(const RationalMap& phi);

}  // namespace berkrh
