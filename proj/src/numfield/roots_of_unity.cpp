#include "rkt/numfield/field.hpp"

#include <map>
#include <numeric>

namespace rkt::numfield {

namespace {

ZPoly cyclotomic(unsigned long m) {
  static thread_local std::map<unsigned long, ZPoly> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  ZPoly f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d) continue;
    ZPoly q;
    require(divide_monic(f, cyclotomic(d), q), ErrorKind::Internal, "cyclotomic division failed");
    f = q;
  }
  cache[m] = f;
  return f;
}

IntMatrix companion(const ZPoly& f) {
  std::size_t n = static_cast<std::size_t>(degree(f));
  IntMatrix C(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) C(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) C(i, n - 1) = -f[i];
  return C;
}

// zeta_m lies in Q[x]/(f) iff the etale algebra Q[x,y]/(f(x), Phi_m(y)) has phi(m) field factors.
bool contains_root_of_unity(const ZPoly& f, unsigned long m) {
  ZPoly phi = cyclotomic(m);
  IntMatrix A = companion(f), B = companion(phi);
  std::size_t n = A.rows(), k = B.rows();
  for (long s = 1; s < 200; ++s) {
    // Multiplication by x + s*y on the basis x^i y^j (index i*k + j).
    RatMatrix T(n * k, n * k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i2 = 0; i2 < n; ++i2)
          if (A(i2, i) != 0) T(i2 * k + j, i * k + j) += Rational(A(i2, i));
        for (std::size_t j2 = 0; j2 < k; ++j2)
          if (B(j2, j) != 0) T(i * k + j2, i * k + j) += Rational(s * B(j2, j));
      }
    Poly N = charpoly(T);
    if (!squarefree(N)) continue;
    ZPoly Nz = primitive_integer(N);
    return count_irreducible_factors(Nz) == k;
  }
  fail(ErrorKind::Internal, "no separating primitive element found for the cyclotomic test");
}

bool sieve_admits(const ZPoly& f, unsigned long m, unsigned long p) {
  for (unsigned fi : factor_degrees_mod_p(f, p)) {
    Integer q = ipow(Integer(p), fi) - 1;
    if (q % m != 0) return false;
  }
  return true;
}

}  // namespace

unsigned long roots_of_unity_order(const NumberField& K) {
  // Real places force mu = {+1, -1}.
  if (K.r1 > 0) return 2;
  std::size_t n = K.degree;
  unsigned long largest = 1;
  for (unsigned long m = 1; m <= 2 * n * n + 2; ++m)
    if (euler_phi(m) <= n) largest = m;
  unsigned long w = 1;
  const Integer& disc = K.discriminant_of_poly;
  for (unsigned long m = 1; m <= 2 * largest; ++m) {
    if (n % euler_phi(m) != 0) continue;
    bool exact = contains_root_of_unity(K.min_poly, m);
    std::size_t checked = 0;
    bool refuted = false;
    for (unsigned long p = 3; p < 200000; p += 2) {
      if (!is_prime(p) || disc % p == 0 || m % p == 0) continue;
      ++checked;
      if (!sieve_admits(K.min_poly, m, p)) {
        refuted = true;
        break;
      }
      if (exact && checked >= 50) break;
      if (!exact && checked >= 2000) break;
    }
    if (exact && refuted)
      fail(ErrorKind::Internal, "roots of unity: exact test finds zeta_" + std::to_string(m) + " but the residue sieve refutes it");
    if (!exact && !refuted)
      fail(ErrorKind::Internal, "roots of unity: exact test rejects zeta_" + std::to_string(m) +
                                    " but no residue field refutes it");
    if (exact) w = std::lcm(w, m);
  }
  require(w % 2 == 0 && n % euler_phi(w) == 0, ErrorKind::Internal, "inconsistent roots of unity order");
  return w;
}

}  // namespace rkt::numfield
