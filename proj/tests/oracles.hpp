#pragma once

// Reference computations for tests. They avoid the engine's polygon and
// polynomial code: valuations by repeated division, products expanded by
// plain coefficient convolution, root valuations read off known roots.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "berkrh/exactval.hpp"
#include "berkrh/laurent.hpp"

namespace oracle {

using berkrh::Rational;

// v_p(n) for n != 0 by repeated division.
inline long val_int(mpz_class n, long p) {
  long v = 0;
  if (n < 0) n = -n;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// v_p(x); returns false for x == 0.
inline bool val(const Rational& x, long p, Rational& out) {
  if (x == 0) return false;
  out = Rational(val_int(x.get_num(), p) - val_int(x.get_den(), p));
  return true;
}

inline Rational val_or(const Rational& x, long p, const Rational& if_zero) {
  Rational v;
  return val(x, p, v) ? v : if_zero;
}

// Coefficients of c * prod (T - r_j), index = exponent.
inline std::vector<Rational> expand_roots(const Rational& c, const std::vector<Rational>& roots) {
  std::vector<Rational> coef{c};
  for (const auto& r : roots) {
    std::vector<Rational> next(coef.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] -= coef[i] * r;
    }
    coef = next;
  }
  return coef;
}

inline berkrh::LaurentPoly to_poly(const std::vector<Rational>& coef) {
  berkrh::LaurentPoly::Terms t;
  for (std::size_t i = 0; i < coef.size(); ++i)
    if (coef[i] != 0) t.emplace(static_cast<long>(i), coef[i]);
  return berkrh::LaurentPoly(t);
}

// Horner evaluation on a plain coefficient vector.
inline Rational eval(const std::vector<Rational>& coef, const Rational& x) {
  Rational acc(0);
  for (std::size_t k = coef.size(); k-- > 0;) acc = acc * x + coef[k];
  return acc;
}

// Derivative of a plain coefficient vector.
inline std::vector<Rational> derive(const std::vector<Rational>& coef) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coef.size(); ++i) d.push_back(coef[i] * Rational(static_cast<long>(i)));
  if (d.empty()) d.push_back(Rational(0));
  return d;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }
  // num / den, canonical; numerator drawn first.
  Rational fraction(long nlo, long nhi, long dlo, long dhi) {
    const long num = uniform(nlo, nhi);
    const long den = uniform(dlo, dhi);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  // Small rational with numerator and denominator drawn from p-heavy sets.
  Rational small_rational(long p, bool allow_zero = true) {
    for (;;) {
      long num = uniform(-12, 12);
      if (num == 0 && !allow_zero) continue;
      long den_pow = uniform(0, 2);
      long den = uniform(1, 3);
      for (long k = 0; k < den_pow; ++k) den *= p;
      long num_pow = uniform(0, 2);
      for (long k = 0; k < num_pow; ++k) num *= p;
      Rational q(num, den);
      q.canonicalize();
      if (q == 0 && !allow_zero) continue;
      return q;
    }
  }
};

}  // namespace oracle
