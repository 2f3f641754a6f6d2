#include "rkt/abgrp/snf.hpp"

#include <algorithm>

namespace rkt::abgrp {

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Invariant throughout: A_original = U * A * V.
// Row op  A <- E A   requires U <- U E^{-1};  column op A <- A F requires V <- F^{-1} V.
struct Reducer {
  IntMatrix A, U, V;
  bool track;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    A.swap_rows(i, j);
    if (track) U.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    A.swap_cols(i, j);
    if (track) V.swap_rows(i, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    if (track)
      for (std::size_t r = 0; r < U.rows(); ++r) U(r, i) = -U(r, i);
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) += q * A(j, c);
    if (track)
      for (std::size_t r = 0; r < U.rows(); ++r) U(r, j) -= q * U(r, i);
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) += q * A(r, j);
    if (track)
      for (std::size_t c = 0; c < V.cols(); ++c) V(j, c) -= q * V(i, c);
  }
  // Rows (t, i) <- [[s, u], [-y/g, x/g]] (rows t, i), x = A(t,t), y = A(i,t).
  void row_gcd(std::size_t t, std::size_t i) {
    Integer x = A(t, t), y = A(i, t), g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Integer a = x / g, b = y / g;
    for (std::size_t c = 0; c < A.cols(); ++c) {
      Integer rt = A(t, c), ri = A(i, c);
      A(t, c) = s * rt + u * ri;
      A(i, c) = a * ri - b * rt;
    }
    // Inverse of [[s,u],[-b,a]] is [[a,-u],[b,s]]; U <- U * inverse on columns (t, i).
    if (track)
      for (std::size_t r = 0; r < U.rows(); ++r) {
        Integer ct = U(r, t), ci = U(r, i);
        U(r, t) = a * ct + b * ci;
        U(r, i) = s * ci - u * ct;
      }
  }
  void col_gcd(std::size_t t, std::size_t j) {
    Integer x = A(t, t), y = A(t, j), g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Integer a = x / g, b = y / g;
    for (std::size_t r = 0; r < A.rows(); ++r) {
      Integer ct = A(r, t), cj = A(r, j);
      A(r, t) = s * ct + u * cj;
      A(r, j) = a * cj - b * ct;
    }
    // Column op F has columns (t, j) <- (s ct + u cj, -b ct + a cj); F^{-1} acts on rows (t, j) of V.
    if (track)
      for (std::size_t c = 0; c < V.cols(); ++c) {
        Integer rt = V(t, c), rj = V(j, c);
        V(t, c) = a * rt + b * rj;
        V(j, c) = s * rj - u * rt;
      }
  }

  void run() {
    std::size_t m = A.rows(), n = A.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (!found || abs(A(i, j)) < abs(A(pi, pj)))) {
            found = true;
            pi = i;
            pj = j;
          }
      if (!found) return;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (A(i, t) == 0) continue;
          if (A(i, t) % A(t, t) == 0)
            add_row(i, t, -(A(i, t) / A(t, t)));
          else
            row_gcd(t, i);
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(t, j) == 0) continue;
          if (A(t, j) % A(t, t) == 0)
            add_col(j, t, -(A(t, j) / A(t, t)));
          else {
            col_gcd(t, j);
            dirty = true;
          }
        }
        if (dirty) continue;
        // Column t may have been refilled by column gcd steps.
        bool col_clear = true;
        for (std::size_t i = t + 1; i < m; ++i)
          if (A(i, t) != 0) col_clear = false;
        if (!col_clear) continue;
        // Divisibility: fold a bad row into row t and repeat.
        std::size_t bad = m;
        for (std::size_t i = t + 1; i < m && bad == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (A(i, j) % A(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad == m) break;
        add_row(t, bad, Integer(1));
      }
      if (A(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& A) {
  Reducer r{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols()), true};
  r.run();
  return SNFResult{std::move(r.U), std::move(r.A), std::move(r.V)};
}

std::vector<Integer> elementary_divisors(const IntMatrix& A) {
  Reducer r{A, IntMatrix(), IntMatrix(), false};
  r.run();
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) d.push_back(r.A(i, i));
  return d;
}

}  // namespace rkt::abgrp
