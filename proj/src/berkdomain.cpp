#include "berkrh/berkdomain.hpp"

#include "berkrh/errors.hpp"

namespace berkrh {

namespace {

DiscKind opposite(DiscKind k) { return k == DiscKind::open ? DiscKind::closed : DiscKind::open; }

// A disc as a finite disc F(a, s, kind), or as its complement.
struct NormDisc {
  bool complement;
  Rational a;
  Rational s;
  DiscKind kind;
};

NormDisc norm(const DiscSpec& D) {
  if (D.center.is_finite()) return {false, D.center.value(), D.log_radius, D.kind};
  return {true, Rational(0), Rational(-D.log_radius), opposite(D.kind)};
}

bool center_in(const Rational& b, const NormDisc& F, const Prime& p) {
  ValQ v = padic_val(Rational(b - F.a), p);
  return F.kind == DiscKind::closed ? v >= ValQ(F.s) : v > ValQ(F.s);
}

// Both finite: F1 contains F2.
bool finite_contains(const NormDisc& F1, const NormDisc& F2, const Prime& p) {
  if (!center_in(F2.a, F1, p)) return false;
  if (F1.kind == DiscKind::open && F2.kind == DiscKind::closed) return F2.s > F1.s;
  return F2.s >= F1.s;
}

bool finite_disjoint(const NormDisc& A, const NormDisc& B, const Prime& p) {
  return !finite_contains(A, B, p) && !finite_contains(B, A, p);
}

bool norm_contains(const NormDisc& O, const NormDisc& I, const Prime& p) {
  if (!O.complement && !I.complement) return finite_contains(O, I, p);
  if (!O.complement) return false;  // a finite disc misses infinity
  NormDisc G = O;
  G.complement = false;
  if (!I.complement) return finite_disjoint(G, I, p);
  NormDisc H = I;
  H.complement = false;
  return finite_contains(H, G, p);
}

}  // namespace

std::string to_string(DiscKind k) { return k == DiscKind::open ? "open" : "closed"; }

std::vector<DiscSpec> FtDomainP1::removed() const {
  std::vector<DiscSpec> all = removed_open;
  all.insert(all.end(), removed_closed.begin(), removed_closed.end());
  return all;
}

bool FtDomainP1::contains_infinity() const {
  for (const auto& D : removed())
    if (D.center.is_inf()) return false;
  return true;
}

TypeTwoPoint normalize_point(const TypeTwoPoint& x) {
  if (x.center.is_finite()) return x;
  return {ProjQ(Rational(0)), Rational(-x.log_radius)};
}

bool same_point(const TypeTwoPoint& x, const TypeTwoPoint& y, const Prime& p) {
  TypeTwoPoint a = normalize_point(x);
  TypeTwoPoint b = normalize_point(y);
  if (a.log_radius != b.log_radius) return false;
  return padic_val(Rational(a.center.value() - b.center.value()), p) >= ValQ(a.log_radius);
}

bool disc_contains(const DiscSpec& outer, const DiscSpec& inner, const Prime& p) {
  return norm_contains(norm(outer), norm(inner), p);
}

bool discs_disjoint(const DiscSpec& a, const DiscSpec& b, const Prime& p) {
  NormDisc A = norm(a);
  NormDisc B = norm(b);
  if (A.complement && B.complement) return false;
  if (!A.complement && !B.complement) return finite_disjoint(A, B, p);
  if (A.complement) std::swap(A, B);
  B.complement = false;
  return finite_contains(B, A, p);
}

bool discs_equal(const DiscSpec& a, const DiscSpec& b, const Prime& p) {
  return disc_contains(a, b, p) && disc_contains(b, a, p);
}

bool point_in_disc(const TypeTwoPoint& x, const DiscSpec& D, const Prime& p) {
  TypeTwoPoint y = normalize_point(x);
  NormDisc N = norm(D);
  NormDisc closed_hull{false, y.center.value(), y.log_radius, DiscKind::closed};
  if (!N.complement) return finite_contains(N, closed_hull, p);
  N.complement = false;
  return !finite_contains(N, closed_hull, p);
}

bool point_in_disc(const ProjQ& x, const DiscSpec& D, const Prime& p) {
  NormDisc N = norm(D);
  if (x.is_inf()) return N.complement;
  bool in = center_in(x.value(), NormDisc{false, N.a, N.s, N.kind}, p);
  return N.complement ? !in : in;
}

FtDomainP1 domain_validate(const FtDomainP1& Y, const Prime& p) {
  if (Y.genus < 0) throw InputError("genus: must be nonnegative");
  for (const auto& D : Y.removed_open)
    if (D.kind != DiscKind::open) throw InputError("removed_open: disc of kind closed");
  for (const auto& D : Y.removed_closed)
    if (D.kind != DiscKind::closed) throw InputError("removed_closed: disc of kind open");
  const auto all = Y.removed();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!discs_disjoint(all[i], all[j], p))
        throw InputError("removed discs " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      // Disjoint discs cover P^1 only when one is the complement of the other.
      NormDisc A = norm(all[i]);
      NormDisc B = norm(all[j]);
      if (A.complement != B.complement) {
        if (A.complement) std::swap(A, B);
        B.complement = false;
        if (finite_contains(A, B, p) && finite_contains(B, A, p))
          throw InputError("removed discs " + std::to_string(i) + " and " + std::to_string(j) +
                           " are complementary: the domain is empty");
      }
    }
  return Y;
}

long euler_char(const FtDomainP1& Y) {
  const long m = static_cast<long>(Y.removed_open.size() + Y.removed_closed.size());
  return m == 0 ? 2 - 2 * Y.genus : 2 - 2 * Y.genus - m;
}

ValQ vnorm_at_point(const LaurentPoly& f, const TypeTwoPoint& x, const Prime& p) {
  if (f.is_zero()) return ValQ::inf();
  TypeTwoPoint y = normalize_point(x);
  const Rational& a = y.center.value();
  const Rational& s = y.log_radius;
  long k = f.ord_low() < 0 ? -f.ord_low() : 0;
  LaurentPoly g = k > 0 ? f * LaurentPoly::monomial(Rational(1), k) : f;
  Rational v = build_polygon(taylor_shift(g, a), p).eval(s);
  if (k > 0) {
    // |T| at eta_{a,s} is max(|a|, p^-s).
    ValQ vt = min(padic_val(a, p), ValQ(s));
    v -= Rational(k) * vt.value();
  }
  return ValQ(v);
}

ValQ vnorm_at_point(const RationalMap& f, const TypeTwoPoint& x, const Prime& p) {
  if (f.num().is_zero()) return ValQ::inf();
  return ValQ(Rational(vnorm_at_point(f.num(), x, p).value() - vnorm_at_point(f.den(), x, p).value()));
}

bool point_in_domain(const TypeTwoPoint& x, const FtDomainP1& Y, const Prime& p) {
  for (const auto& D : Y.removed())
    if (point_in_disc(x, D, p)) return false;
  return true;
}

bool point_in_domain(const ProjQ& x, const FtDomainP1& Y, const Prime& p) {
  for (const auto& D : Y.removed())
    if (point_in_disc(x, D, p)) return false;
  return true;
}

SkeletonProbe skeleton_image_probe(const RationalMap& phi, const Rational& a, const Rational& s, const Prime& p) {
  if (phi.is_constant()) throw DegenerateInput("skeleton_image_probe: constant map");
  ValPolygon num = build_polygon(taylor_shift(phi.num(), a), p);
  ValPolygon den = build_polygon(taylor_shift(phi.den(), a), p);
  auto [n0, n1] = num.achieving_range(s);
  auto [d0, d1] = den.achieving_range(s);
  if (n0 != n1 || d0 != d1)
    throw DegenerateInput("skeleton_image_probe: log-radius " + to_string(s) + " is a breakpoint");
  return {n0 - d0, ValQ(Rational(num.eval(s) - den.eval(s)))};
}

long count_zeros_in_disc(const LaurentPoly& f, const DiscSpec& D, const Prime& p) {
  if (f.is_zero()) throw DegenerateInput("counting zeros of the zero polynomial");
  NormDisc N = norm(D);
  LaurentPoly g = taylor_shift(f, N.a);
  ValPolygon P = build_polygon(g, p);
  ValBound lo = N.kind == DiscKind::closed ? ValBound::closed(N.s) : ValBound::open(N.s);
  long in_finite = g.ord_low() + count_zero_valuations(P, lo, ValBound::unbounded());
  return N.complement ? f.degree() - in_finite : in_finite;
}

long count_zeros_in_domain(const LaurentPoly& f, const FtDomainP1& Y, const Prime& p) {
  long n = f.degree();
  for (const auto& D : Y.removed()) n -= count_zeros_in_disc(f, D, p);
  return n;
}

}  // namespace berkrh
