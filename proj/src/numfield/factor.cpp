// Factorization of monic integer polynomials: squarefree split over Q, then
// Cantor-Zassenhaus mod p, Hensel lifting, and subset recombination.
#include "rkt/numfield/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace rkt::numfield {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void mtrim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mdeg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly reduce(const ZPoly& f, u64 p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c;
    mpz_fdiv_r_ui(c.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = c.get_ui();
  }
  mtrim(r);
  return r;
}

ModPoly msub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  mtrim(r);
  return r;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  mtrim(r);
  return r;
}

void mdivmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q, ModPoly& r) {
  r = a;
  int db = mdeg(b);
  if (mdeg(a) < db) {
    q.clear();
    return;
  }
  q.assign(mdeg(a) - db + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (int k = mdeg(a); k >= db; --k) {
    if (!r[k]) continue;
    u64 c = mulmod(r[k], inv, p);
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  mtrim(r);
  mtrim(q);
}

ModPoly mmod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly q, r;
  mdivmod(a, b, p, q, r);
  return r;
}

ModPoly mquo(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly q, r;
  mdivmod(a, b, p, q, r);
  return q;
}

ModPoly mmonic(ModPoly f, u64 p) {
  if (f.empty()) return f;
  u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

ModPoly mgcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

ModPoly mderiv(const ModPoly& f, u64 p) {
  ModPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(mulmod(f[k], k % p, p));
  mtrim(d);
  return d;
}

ModPoly mpow(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = mmod(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mmod(mmul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mmod(mmul(r, base, p), m, p);
  }
  return r;
}

// s*a + t*b = 1 mod p for coprime a, b.
void mbezout(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mdivmod(r0, r1, p, q, r);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  require(mdeg(r0) == 0, ErrorKind::Internal, "Bezout on non-coprime factors");
  u64 inv = invmod(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = mulmod(c, inv, p);
  for (auto& c : t) c = mulmod(c, inv, p);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<ModPoly, unsigned>> ddf(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  for (unsigned i = 1; 2 * i <= static_cast<unsigned>(mdeg(f)); ++i) {
    h = mpow(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mgcd(f, msub(h, x, p), p);
    if (mdeg(g) > 0) {
      out.push_back({g, i});
      f = mquo(f, g, p);
      h = mmod(h, f, p);
    }
  }
  if (mdeg(f) > 0) out.push_back({f, static_cast<unsigned>(mdeg(f))});
  return out;
}

// Equal-degree split of a product of irreducibles of degree i (p odd).
void edf(const ModPoly& g, unsigned i, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (static_cast<unsigned>(mdeg(g)) == i) {
    out.push_back(g);
    return;
  }
  Integer e = (ipow(Integer(static_cast<unsigned long>(p)), i) - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, p - 1);
  for (;;) {
    ModPoly a(mdeg(g));
    for (auto& c : a) c = coin(rng);
    mtrim(a);
    if (mdeg(a) < 1) continue;
    ModPoly b = msub(mpow(a, e, g, p), ModPoly{1}, p);
    ModPoly d = mgcd(g, b, p);
    if (mdeg(d) > 0 && mdeg(d) < mdeg(g)) {
      edf(d, i, p, rng, out);
      edf(mquo(g, d, p), i, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& f, u64 p) {
  std::mt19937_64 rng(0x5eed0000ULL + p);
  std::vector<ModPoly> out;
  for (auto& [g, i] : ddf(f, p)) edf(g, i, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// --- arithmetic mod m = p^k on integer polynomials -------------------------

ZPoly zreduce(ZPoly f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
  return f;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
  trim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  trim(r);
  return r;
}

// Division by monic b modulo m.
void zdivmod(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = zreduce(a, m);
  int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(degree(r) - db + 1, 0);
  for (int k = degree(r); k >= db; --k) {
    Integer c = r[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    mpz_fdiv_r(r[k].get_mpz_t(), r[k].get_mpz_t(), m.get_mpz_t());
  }
  r = zreduce(r, m);
  q = zreduce(q, m);
}

ZPoly lift_mod(const ModPoly& f) {
  ZPoly z;
  for (auto c : f) z.emplace_back(static_cast<unsigned long>(c));
  trim(z);
  return z;
}

// Quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m  ->  same mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  Integer m2 = m * m;
  ZPoly e = zreduce(zsub(f, mul(g, h)), m2);
  ZPoly q, r;
  zdivmod(mul(s, e), h, m2, q, r);
  ZPoly g2 = zreduce(zadd(g, zadd(mul(t, e), mul(q, g))), m2);
  ZPoly h2 = zreduce(zadd(h, r), m2);
  ZPoly b = zreduce(zsub(zadd(mul(s, g2), mul(t, h2)), ZPoly{1}), m2);
  ZPoly c, d;
  zdivmod(mul(s, b), h2, m2, c, d);
  ZPoly s2 = zreduce(zsub(s, d), m2);
  ZPoly t2 = zreduce(zsub(t, zadd(mul(t, b), mul(c, g2))), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lift the monic factorization f = prod(parts) mod p to mod p^(2^steps).
void multi_lift(const ZPoly& f, const std::vector<ModPoly>& parts, u64 p, unsigned steps, std::vector<ZPoly>& out) {
  if (parts.size() == 1) {
    Integer m = ipow(Integer(static_cast<unsigned long>(p)), 1UL << steps);
    out.push_back(zreduce(f, m));
    return;
  }
  std::size_t half = parts.size() / 2;
  std::vector<ModPoly> left(parts.begin(), parts.begin() + half), right(parts.begin() + half, parts.end());
  ModPoly gl{1}, hr{1};
  for (auto& x : left) gl = mmul(gl, x, p);
  for (auto& x : right) hr = mmul(hr, x, p);
  ModPoly sm, tm;
  mbezout(gl, hr, p, sm, tm);
  ZPoly g = lift_mod(gl), h = lift_mod(hr), s = lift_mod(sm), t = lift_mod(tm);
  Integer m(static_cast<unsigned long>(p));
  for (unsigned i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  require(g.back() == 1 && h.back() == 1, ErrorKind::Internal, "Hensel lift lost monicity");
  multi_lift(g, left, p, steps, out);
  multi_lift(h, right, p, steps, out);
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  int n = degree(f);
  if (n <= 1) return {f};
  // Pick the odd prime (among the first few admissible) giving the fewest modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int admissible = 0;
  for (u64 p = 3; admissible < 6 && p < 100000; p += 2) {
    if (!rkt::is_prime(static_cast<unsigned long>(p))) continue;
    ModPoly fp = reduce(f, p);
    if (mdeg(fp) != n || mdeg(mgcd(fp, mderiv(fp, p), p)) != 0) continue;
    ++admissible;
    auto fac = factor_mod_p(fp, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  require(best_p != 0, ErrorKind::Internal, "no admissible prime for factorization");
  if (best.size() == 1) return {f};

  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = ipow(Integer(2), n) * (isqrt(norm2) + 1);
  Integer pk(static_cast<unsigned long>(best_p));
  unsigned steps = 0;
  while (pk <= 2 * bound) {
    pk *= pk;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  multi_lift(f, best, best_p, steps, lifted);

  std::vector<ZPoly> factors;
  ZPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  for (std::size_t size = 1; 2 * size <= live.size();) {
    bool found = false;
    std::vector<bool> pick(live.size(), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      ZPoly g{1};
      for (std::size_t i = 0; i < live.size(); ++i)
        if (pick[i]) g = zreduce(mul(g, lifted[live[i]]), pk);
      g = symmetric(g, pk);
      if (rest[0] != 0 && (g[0] == 0 || rest[0] % g[0] != 0)) continue;
      ZPoly q;
      if (divide_monic(rest, g, q)) {
        factors.push_back(g);
        rest = q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < live.size(); ++i)
          if (!pick[i]) keep.push_back(live[i]);
        live = keep;
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  factors.push_back(rest);
  return factors;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<std::pair<ZPoly, unsigned>> factor_monic(const ZPoly& f0) {
  ZPoly f = f0;
  trim(f);
  require(degree(f) >= 0 && f.back() == 1, ErrorKind::Internal, "factor_monic expects a monic polynomial");
  std::vector<std::pair<ZPoly, unsigned>> out;
  if (degree(f) == 0) return out;
  // Yun's squarefree decomposition over Q; the parts of a monic integer polynomial are monic integer.
  Poly a = to_poly(f);
  Poly b = poly_gcd(a, a.derivative());
  Poly c = divmod(a, b).first;
  Poly d = divmod(a.derivative(), b).first - c.derivative();
  for (unsigned mult = 1; c.degree() > 0; ++mult) {
    Poly y = poly_gcd(c, d);
    if (y.degree() > 0) {
      ZPoly part = primitive_integer(y);
      for (auto& g : zassenhaus(part)) out.push_back({g, mult});
    }
    c = divmod(c, y).first;
    d = divmod(d, y).first - c.derivative();
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return zpoly_less(x.first, y.first) || (x.first == y.first && x.second < y.second);
  });
  return out;
}

bool is_irreducible(const ZPoly& f) {
  auto fac = factor_monic(f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::size_t count_irreducible_factors(const ZPoly& f) {
  std::size_t n = 0;
  for (auto& [g, m] : factor_monic(f)) n += m;
  return n;
}

std::vector<unsigned> factor_degrees_mod_p(const ZPoly& f, std::uint64_t p) {
  ModPoly fp = reduce(f, p);
  require(mdeg(fp) == degree(f), ErrorKind::Internal, "prime divides the leading coefficient");
  std::vector<unsigned> degs;
  for (auto& [g, i] : ddf(mmonic(fp, p), p))
    for (int k = 0; k < mdeg(g) / static_cast<int>(i); ++k) degs.push_back(i);
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace rkt::numfield
