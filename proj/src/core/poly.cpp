#include "rkt/core/poly.hpp"

#include <algorithm>

namespace rkt {

Poly Poly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(z);
  return Poly(std::move(c));
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  Rational l = lead();
  for (auto& x : p.c_) x /= l;
  return p;
}

bool Poly::integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool Poly::integer_valued() const {
  // Integer valued iff integral at 0..deg (finite differences argument).
  for (int t = 0; t <= std::max(degree(), 0); ++t)
    if ((*this)(Rational(t)).get_den() != 1) return false;
  return true;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? "-" : "+";
    }
    bool unit = (a == 1);
    if (!unit || k == 0) s += a.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorKind::Internal, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lb;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool squarefree(const Poly& f) { return poly_gcd(f, f.derivative()).degree() == 0; }

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  require(xs.size() == ys.size(), ErrorKind::Internal, "interpolate: size mismatch");
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis * Poly(ys[i] / denom);
  }
  return result;
}

RatMatrix evaluate(const PolyMatrix& M, const Rational& t) {
  RatMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(i, j)(t);
  return out;
}

IntMatrix evaluate_integral(const PolyMatrix& M, const Integer& t) {
  return to_integer(evaluate(M, Rational(t)));
}

Poly charpoly(const RatMatrix& A0) {
  require(A0.square(), ErrorKind::Internal, "charpoly of non-square matrix");
  std::size_t n = A0.rows();
  RatMatrix H = A0;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && H(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      H.swap_rows(i, m);
      H.swap_cols(i, m);
    }
    Rational piv = H(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (H(r, m - 1) == 0) continue;
      Rational u = H(r, m - 1) / piv;
      for (std::size_t c = 0; c < n; ++c) H(r, c) -= u * H(m, c);
      for (std::size_t c = 0; c < n; ++c) H(c, m) += u * H(c, r);
    }
  }
  // p_k = char poly of leading k x k block.
  std::vector<Poly> p(n + 1);
  p[0] = Poly(Rational(1));
  Poly X = Poly::x();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (X - Poly(H(k - 1, k - 1))) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= H(k - i, k - i - 1);
      p[k] -= Poly(t * H(k - i - 1, k - 1)) * p[k - i - 1];
    }
  }
  return p[n];
}

}  // namespace rkt
