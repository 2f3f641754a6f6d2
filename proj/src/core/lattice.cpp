#include "rkt/core/lattice.hpp"

#include <algorithm>

namespace rkt {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      require(m(i, j).get_den() == 1, ErrorKind::Internal, "expected an integral matrix");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Integer determinant(const IntMatrix& m) {
  require(m.square(), ErrorKind::Input, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Gaussian elimination over Q; returns rank, fills det if square.
static std::size_t rational_eliminate(RatMatrix& a, Rational* det) {
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) {
      d = 0;
      continue;
    }
    if (p != r) {
      a.swap_rows(p, r);
      d = -d;
    }
    d *= a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (det) *det = (r == a.rows() && a.square()) ? d : Rational(0);
  return r;
}

Rational determinant(const RatMatrix& m) {
  require(m.square(), ErrorKind::Input, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  RatMatrix a = m;
  Rational d;
  rational_eliminate(a, &d);
  return d;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rational_eliminate(a, nullptr);
}

std::size_t rank(const IntMatrix& m) { return column_echelon(m).rank; }

RatMatrix inverse(const RatMatrix& m) {
  require(m.square(), ErrorKind::Input, "inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    require(p < n, ErrorKind::Input, "matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

// Replace columns (a, b) by (s*ca + t*cb, -(y/g)*ca + (x/g)*cb) where
// x = M(row,a), y = M(row,b), g = s*x + t*y = gcd. Determinant is 1.
void gcd_combine(IntMatrix& M, IntMatrix& W, std::size_t row, std::size_t a, std::size_t b) {
  Integer x = M(row, a), y = M(row, b);
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Integer xg = x / g, yg = y / g;
  auto apply = [&](IntMatrix& X) {
    for (std::size_t i = 0; i < X.rows(); ++i) {
      Integer ca = X(i, a), cb = X(i, b);
      X(i, a) = s * ca + t * cb;
      X(i, b) = xg * cb - yg * ca;
    }
  };
  apply(M);
  apply(W);
}

void add_col_multiple(IntMatrix& X, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < X.rows(); ++i) X(i, dst) += q * X(i, src);
}

void negate_col(IntMatrix& X, std::size_t j) {
  for (std::size_t i = 0; i < X.rows(); ++i) X(i, j) = -X(i, j);
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& A) {
  ColumnEchelon out;
  out.H = A;
  out.W = IntMatrix::identity(A.cols());
  IntMatrix& H = out.H;
  IntMatrix& W = out.W;
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows() && r < H.cols(); ++i) {
    for (std::size_t j = r + 1; j < H.cols(); ++j) {
      if (H(i, j) == 0) continue;
      if (H(i, r) == 0) {
        H.swap_cols(r, j);
        W.swap_cols(r, j);
        continue;
      }
      gcd_combine(H, W, i, r, j);
    }
    if (H(i, r) == 0) continue;
    if (H(i, r) < 0) {
      negate_col(H, r);
      negate_col(W, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = floor_div(H(i, k), H(i, r));
      if (q != 0) {
        add_col_multiple(H, k, r, -q);
        add_col_multiple(W, k, r, -q);
      }
    }
    out.pivot_rows.push_back(i);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  ColumnEchelon e = column_echelon(A);
  std::size_t n = A.cols();
  IntMatrix K = e.W.block(0, e.rank, n, n - e.rank);
  return lattice_basis(K);
}

IntMatrix lattice_basis(const IntMatrix& B) {
  ColumnEchelon e = column_echelon(B);
  return e.H.block(0, 0, B.rows(), e.rank);
}

IntMatrix saturate(const IntMatrix& B) {
  std::size_t k = B.rows();
  if (B.cols() == 0) return IntMatrix(k, 0);
  IntMatrix C = integer_kernel(B.transpose());
  if (C.cols() == 0) return IntMatrix::identity(k);
  return integer_kernel(C.transpose());
}

FlagBasis flag_basis(const IntMatrix& B) {
  std::size_t k = B.rows();
  IntMatrix R(k, B.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) R(i, j) = B(k - 1 - i, j);
  ColumnEchelon e = column_echelon(R);
  std::size_t r = e.rank;
  FlagBasis out;
  out.basis = IntMatrix(k, r);
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t src = r - 1 - t;
    for (std::size_t i = 0; i < k; ++i) out.basis(i, t) = e.H(k - 1 - i, src);
    out.pivots.push_back(k - 1 - e.pivot_rows[src]);
  }
  return out;
}

RatMatrix solve_left(const IntMatrix& B, const RatMatrix& Y) {
  require(B.rows() == Y.rows(), ErrorKind::Internal, "solve_left shape mismatch");
  std::size_t m = B.rows(), r = B.cols(), c = Y.cols();
  RatMatrix aug(m, r + c);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = Rational(B(i, j));
    for (std::size_t j = 0; j < c; ++j) aug(i, r + j) = Y(i, j);
  }
  // Reduced row echelon on the first r columns.
  std::size_t row = 0;
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t p = row;
    while (p < m && aug(p, col) == 0) ++p;
    require(p < m, ErrorKind::Internal, "solve_left: basis is rank deficient");
    aug.swap_rows(p, row);
    Rational piv = aug(row, col);
    for (std::size_t j = 0; j < r + c; ++j) aug(row, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      Rational f = aug(i, col);
      for (std::size_t j = 0; j < r + c; ++j) aug(i, j) -= f * aug(row, j);
    }
    ++row;
  }
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t j = 0; j < c; ++j)
      require(aug(i, r + j) == 0, ErrorKind::Internal, "solve_left: target outside the span");
  RatMatrix X(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) X(i, j) = aug(i, r + j);
  return X;
}

}  // namespace rkt
