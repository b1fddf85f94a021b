#include "berkrh/exactval.hpp"

#include <stdexcept>

#include "berkrh/errors.hpp"

namespace berkrh {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(long p) : p_(p) {
  if (!is_prime(p)) throw InputError("p must be a prime >= 2, got " + std::to_string(p));
}

const Rational& ValQ::value() const {
  if (!v_) throw std::logic_error("value() of infinite valuation");
  return *v_;
}

ValQ operator+(const ValQ& a, const ValQ& b) {
  if (a.is_inf() || b.is_inf()) return ValQ::inf();
  return ValQ(Rational(*a.v_ + *b.v_));
}

ValQ operator-(const ValQ& a, const Rational& b) {
  if (a.is_inf()) return ValQ::inf();
  return ValQ(Rational(*a.v_ - b));
}

bool operator==(const ValQ& a, const ValQ& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  return *a.v_ == *b.v_;
}

bool operator<(const ValQ& a, const ValQ& b) {
  if (a.is_inf()) return false;
  if (b.is_inf()) return true;
  return *a.v_ < *b.v_;
}

ValQ min(const ValQ& a, const ValQ& b) { return b < a ? b : a; }

const Rational& ProjQ::value() const {
  if (!x_) throw std::logic_error("value() of the point at infinity");
  return *x_;
}

bool operator==(const ProjQ& a, const ProjQ& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  return *a.x_ == *b.x_;
}

bool operator<(const ProjQ& a, const ProjQ& b) {
  if (a.is_inf()) return false;
  if (b.is_inf()) return true;
  return *a.x_ < *b.x_;
}

long padic_val_int(const Integer& n, const Prime& p) {
  if (n == 0) throw std::logic_error("padic_val_int of zero");
  Integer rest;
  mpz_class pz = p.as_integer();
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

ValQ padic_val(const Rational& x, const Prime& p) {
  if (x == 0) return ValQ::inf();
  return ValQ(Rational(padic_val_int(x.get_num(), p) - padic_val_int(x.get_den(), p)));
}

ValQ valq_affine(const ValQ& v, long i, const Rational& s) {
  if (v.is_inf()) return v;
  return ValQ(Rational(v.value() + Rational(i) * s));
}

Rational prime_power(const Prime& p, long k) {
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.as_integer().get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(pk);
  Rational r(1, 1);
  r = r / Rational(pk);
  return r;
}

long floor_long(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long ceil_long(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const ValQ& v) { return v.is_inf() ? "inf" : v.value().get_str(); }

std::string to_string(const ProjQ& x) { return x.is_inf() ? "inf" : x.value().get_str(); }

std::ostream& operator<<(std::ostream& os, const ValQ& v) { return os << to_string(v); }

std::ostream& operator<<(std::ostream& os, const ProjQ& x) { return os << to_string(x); }

}  // namespace berkrh
