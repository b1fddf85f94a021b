#include "berkrh/laurent.hpp"

#include <stdexcept>

#include "berkrh/errors.hpp"

namespace berkrh {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const long, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
  LaurentPoly f;
  f.add_term(exponent, c);
  return f;
}

LaurentPoly LaurentPoly::from_roots(const Rational& c, const std::vector<Rational>& roots) {
  LaurentPoly f = constant(c);
  for (const auto& r : roots) f = f * LaurentPoly{{1, Rational(1)}, {0, Rational(-r)}};
  return f;
}

bool LaurentPoly::is_polynomial() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPoly::ord_low() const {
  if (terms_.empty()) throw DegenerateInput("ord_low of the zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::ord_high() const {
  if (terms_.empty()) throw DegenerateInput("ord_high of the zero polynomial");
  return terms_.rbegin()->first;
}

long LaurentPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

Rational LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Rational LaurentPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x == 0) throw DegenerateInput("evaluating a Laurent polynomial with a pole at 0");
    Rational xe(1);
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) xe *= base;
    acc += c * xe;
  }
  return acc;
}

void LaurentPoly::add_term(long e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly pow(const LaurentPoly& f, unsigned n) {
  LaurentPoly result = LaurentPoly::constant(Rational(1));
  LaurentPoly base = f;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly derivative(const LaurentPoly& f) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : f.terms())
    if (e != 0) t.emplace(e - 1, c * Rational(e));
  return LaurentPoly(std::move(t));
}

namespace {

// Horner evaluation of a polynomial f at the polynomial g.
LaurentPoly horner(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero()) return {};
  LaurentPoly acc;
  for (long e = f.degree(); e >= 0; --e) {
    acc = acc * g;
    acc += LaurentPoly::constant(f.coeff(e));
  }
  return acc;
}

void require_polynomial(const LaurentPoly& f, const char* what) {
  if (!f.is_polynomial()) throw InputError(std::string(what) + ": negative exponents are not allowed");
}

}  // namespace

LaurentPoly taylor_shift(const LaurentPoly& f, const Rational& a) {
  require_polynomial(f, "taylor_shift");
  return horner(f, LaurentPoly{{1, Rational(1)}, {0, a}});
}

LaurentPoly invert_coordinate(const LaurentPoly& f) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : f.terms()) t.emplace(-e, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly reverse(const LaurentPoly& f, long n) {
  require_polynomial(f, "reverse");
  if (f.degree() > n) throw std::logic_error("reverse: degree exceeds n");
  LaurentPoly::Terms t;
  for (const auto& [e, c] : f.terms()) t.emplace(n - e, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly compose(const LaurentPoly& f, const LaurentPoly& g) {
  require_polynomial(f, "compose");
  require_polynomial(g, "compose");
  return horner(f, g);
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  require_polynomial(a, "divmod");
  require_polynomial(b, "divmod");
  if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
  LaurentPoly q;
  LaurentPoly r = a;
  const long db = b.degree();
  const Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    LaurentPoly t = LaurentPoly::monomial(r.leading_coeff() / lb, r.degree() - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading_coeff());
}

RationalMap::RationalMap(LaurentPoly num, LaurentPoly den) {
  require_polynomial(num, "RationalMap numerator");
  require_polynomial(den, "RationalMap denominator");
  if (den.is_zero()) throw InputError("RationalMap: zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly::constant(Rational(1));
    return;
  }
  LaurentPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rational lc = den.leading_coeff();
  num_ = num * (Rational(1) / lc);
  den_ = den * (Rational(1) / lc);
}

long RationalMap::degree() const { return std::max(num_.degree(), den_.degree()); }

ProjQ RationalMap::eval(const ProjQ& x) const {
  if (x.is_inf()) {
    const long dn = num_.degree();
    const long dd = den_.degree();
    if (dn > dd) return ProjQ::infinity();
    if (dn < dd) return ProjQ(Rational(0));
    return ProjQ(Rational(num_.leading_coeff() / den_.leading_coeff()));
  }
  Rational d = den_.eval(x.value());
  if (d == 0) return ProjQ::infinity();
  return ProjQ(Rational(num_.eval(x.value()) / d));
}

LaurentPoly wronskian(const RationalMap& phi) {
  LaurentPoly w = derivative(phi.num()) * phi.den() - phi.num() * derivative(phi.den());
  if (w.is_zero()) throw DegenerateInput("wronskian of a constant map is zero");
  return w;
}

RationalMap sub_const(const RationalMap& phi, const ProjQ& c) {
  if (c.is_inf()) {
    if (phi.num().is_zero()) throw DegenerateInput("reciprocal of the zero map");
    return RationalMap(phi.den(), phi.num());
  }
  return RationalMap(phi.num() - phi.den() * c.value(), phi.den());
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const long n = outer.degree();
  LaurentPoly num;
  LaurentPoly den;
  std::vector<LaurentPoly> a_pow{LaurentPoly::constant(Rational(1))};
  std::vector<LaurentPoly> b_pow{LaurentPoly::constant(Rational(1))};
  for (long i = 1; i <= n; ++i) {
    a_pow.push_back(a_pow.back() * inner.num());
    b_pow.push_back(b_pow.back() * inner.den());
  }
  for (long i = 0; i <= n; ++i) {
    LaurentPoly mix = a_pow[i] * b_pow[n - i];
    num += mix * outer.num().coeff(i);
    den += mix * outer.den().coeff(i);
  }
  return RationalMap(num, den);
}

RationalMap recenter_source(const RationalMap& phi, const ProjQ& c) {
  if (c.is_finite()) return RationalMap(taylor_shift(phi.num(), c.value()), taylor_shift(phi.den(), c.value()));
  const long n = phi.degree();
  return RationalMap(reverse(phi.num(), n), reverse(phi.den(), n));
}

long order_at_infinity(const RationalMap& phi) {
  if (phi.num().is_zero()) throw DegenerateInput("order at infinity of the zero map");
  return std::max(0L, phi.den().degree() - phi.num().degree());
}

}  // namespace berkrh
