#pragma once

#include "rkt/core/integer.hpp"
#include "rkt/core/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rkt {

// Univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly from_integers(const std::vector<Integer>& coeffs);
  static Poly monomial(const Rational& c, std::size_t k);
  static Poly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& t) const;
  Poly derivative() const;
  Poly monic() const;
  bool integral() const;  // all coefficients integers
  // Every value at an integer argument is an integer (binomial-basis test).
  bool integer_valued() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator==(const Poly& a, int v) { return a == Poly(v); }
  friend bool operator!=(const Poly& a, int v) { return !(a == Poly(v)); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
bool squarefree(const Poly& f);

// Unique polynomial of degree < points through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

using PolyMatrix = Matrix<Poly>;
IntMatrix evaluate_integral(const PolyMatrix& M, const Integer& t);
RatMatrix evaluate(const PolyMatrix& M, const Rational& t);

// Characteristic polynomial det(x I - A) via Hessenberg reduction over Q.
Poly charpoly(const RatMatrix& A);

}  // namespace rkt
