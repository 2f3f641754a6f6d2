#include "rkt/numfield/zpoly.hpp"

namespace rkt::numfield {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

bool divide_monic(const ZPoly& f, const ZPoly& g, ZPoly& q) {
  require(!g.empty() && g.back() == 1, ErrorKind::Internal, "divide_monic needs a monic divisor");
  ZPoly r = f;
  int dg = degree(g);
  if (degree(f) < dg) {
    q.clear();
    return f.empty();
  }
  q.assign(degree(f) - dg + 1, 0);
  for (int k = degree(f); k >= dg; --k) {
    Integer c = r[k];
    if (c == 0) continue;
    q[k - dg] = c;
    for (int j = 0; j <= dg; ++j) r[k - dg + j] -= c * g[j];
  }
  trim(r);
  trim(q);
  return r.empty();
}

Poly to_poly(const ZPoly& f) { return Poly::from_integers(f); }

ZPoly primitive_integer(const Poly& f) {
  require(!f.is_zero(), ErrorKind::Internal, "primitive_integer of zero");
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    Rational s = c * Rational(l);
    z.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  for (auto& c : z) c /= g;
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

Integer resultant(const ZPoly& f, const ZPoly& g) {
  int m = degree(f), n = degree(g);
  require(m >= 0 && n >= 0, ErrorKind::Internal, "resultant of zero polynomial");
  if (m == 0) return ipow(f[0], n);
  if (n == 0) return ipow(g[0], m);
  std::size_t N = m + n;
  IntMatrix S(N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S(i, i + j) = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S(n + i, i + j) = g[n - j];
  return determinant(S);
}

Integer discriminant(const ZPoly& f) {
  int n = degree(f);
  require(n >= 1 && f.back() == 1, ErrorKind::Internal, "discriminant expects a monic polynomial");
  if (n == 1) return 1;
  Integer r = resultant(f, derivative(f));
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

}  // namespace rkt::numfield
