#pragma once

// Exact rationals and p-adic valuations.
//
// Absolute values are never materialised: everything lives in log scale,
// |x| = p^(-v(x)), and a radius r corresponds to the log-radius s with
// r = p^(-s).

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

namespace berkrh {

using Integer = mpz_class;
using Rational = mpq_class;

class Prime {
 public:
  // Throws InputError unless p is a prime >= 2.
  explicit Prime(long p);

  long value() const noexcept { return p_; }
  Integer as_integer() const { return Integer(p_); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  long p_;
};

bool is_prime(long n);

// A valuation value: a rational, or +infinity (the valuation of zero).
class ValQ {
 public:
  ValQ() = default;  // +inf
  ValQ(Rational v) : v_(std::move(v)) { v_->canonicalize(); }  // NOLINT(google-explicit-constructor)
  ValQ(long v) : v_(Rational(v)) {}       // NOLINT(google-explicit-constructor)

  static ValQ inf() { return ValQ(); }

  bool is_inf() const noexcept { return !v_.has_value(); }
  bool is_finite() const noexcept { return v_.has_value(); }
  // Throws std::logic_error on INF.
  const Rational& value() const;

  friend ValQ operator+(const ValQ& a, const ValQ& b);
  friend ValQ operator-(const ValQ& a, const Rational& b);

  friend bool operator==(const ValQ& a, const ValQ& b);
  friend bool operator<(const ValQ& a, const ValQ& b);
  friend bool operator<=(const ValQ& a, const ValQ& b) { return !(b < a); }
  friend bool operator>(const ValQ& a, const ValQ& b) { return b < a; }
  friend bool operator>=(const ValQ& a, const ValQ& b) { return !(a < b); }

 private:
  std::optional<Rational> v_;
};

ValQ min(const ValQ& a, const ValQ& b);

// A point of P^1(Q): a rational number or the point at infinity.
class ProjQ {
 public:
  ProjQ() = default;  // 0
  ProjQ(Rational x) : x_(std::move(x)) { x_->canonicalize(); }  // NOLINT(google-explicit-constructor)
  ProjQ(long x) : x_(Rational(x)) {}       // NOLINT(google-explicit-constructor)

  static ProjQ infinity() {
    ProjQ q;
    q.x_.reset();
    return q;
  }

  bool is_inf() const noexcept { return !x_.has_value(); }
  bool is_finite() const noexcept { return x_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ProjQ& a, const ProjQ& b);
  // Finite points ordered by value, infinity last.
  friend bool operator<(const ProjQ& a, const ProjQ& b);

 private:
  std::optional<Rational> x_ = Rational(0);
};

// v_p(x); INF iff x == 0.
ValQ padic_val(const Rational& x, const Prime& p);
// v_p(n) for n != 0.
long padic_val_int(const Integer& n, const Prime& p);

// v + i*s, INF absorbing.
ValQ valq_affine(const ValQ& v, long i, const Rational& s);

// p^k as an exact rational, for any integer k.
Rational prime_power(const Prime& p, long k);

// floor/ceil of a rational as long.
long floor_long(const Rational& q);
long ceil_long(const Rational& q);

std::string to_string(const Rational& q);
std::string to_string(const ValQ& v);
std::string to_string(const ProjQ& x);

std::ostream& operator<<(std::ostream& os, const ValQ& v);
std::ostream& operator<<(std::ostream& os, const ProjQ& x);

}  // namespace berkrh
