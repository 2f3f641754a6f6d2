#pragma once

// Independent reference computations used by the unit and acceptance tests.
// They deliberately avoid the library's algorithms (no Smith reduction, no Sturm
// chains) so agreement is meaningful.

#include "rkt/core/matrix.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using rkt::Integer;
using rkt::IntMatrix;

// Determinant by cofactor expansion.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    Integer term = a[0][c] * cofactor_det(minor);
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<Integer> invariant_factors(const IntMatrix& A) {
  std::size_t m = A.rows(), n = A.cols();
  std::vector<Integer> det_div{1};
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m, k, 0, cur, rs);
    subsets(n, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = A(r[i], c[j]);
        g = gcd(g, cofactor_det(sub));
      }
    if (g == 0) break;
    det_div.push_back(g);
  }
  std::vector<Integer> s;
  for (std::size_t k = 1; k < det_div.size(); ++k) s.push_back(det_div[k] / det_div[k - 1]);
  return s;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix A(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) A(i, j) = dist(rng);
  return A;
}

using cplx = std::complex<long double>;

// All complex roots of a polynomial with integer coefficients (constant term first)
// by Durand-Kerner iteration.
inline std::vector<cplx> durand_kerner(const std::vector<long>& coeffs) {
  std::size_t n = coeffs.size() - 1;
  long double lead = coeffs.back();
  std::vector<cplx> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = cplx(coeffs[i] / lead, 0);
  auto eval = [&](cplx z) {
    cplx v = a[n];
    for (std::size_t i = n; i-- > 0;) v = v * z + a[i];
    return v;
  };
  std::vector<cplx> z(n);
  cplx seed(0.4L, 0.9L);
  long double radius = 1;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(a[i]));
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, (long double)i) * (radius / 2);
  for (int iter = 0; iter < 5000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      cplx step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

// Real roots of a squarefree integer polynomial, ascending, by Durand-Kerner.
inline std::vector<long double> numeric_real_roots(const std::vector<long>& coeffs) {
  std::vector<long double> out;
  for (const auto& z : durand_kerner(coeffs))
    if (std::abs(z.imag()) < 1e-7L) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

inline Integer binomial_sum(unsigned long r, int parity) {
  Integer total = 0;
  Integer c = 1;  // binom(r, k)
  for (unsigned long k = 0; k <= r; ++k) {
    if (static_cast<int>(k % 2) == parity) total += c;
    c = c * Integer(r - k) / Integer(k + 1);
  }
  return total;
}

}  // namespace oracle
