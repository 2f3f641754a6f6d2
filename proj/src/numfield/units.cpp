#include "rkt/numfield/element.hpp"

namespace rkt::numfield {

namespace {

// Smallest Y > 0 (then X > 0) with X^2 - D Y^2 = ±4 and X ≡ B Y (mod 2).
std::pair<Integer, Integer> smallest_solution(const Integer& D, const Integer& B) {
  auto admissible = [&](const Integer& X, const Integer& Y) {
    Integer v = X * X - D * Y * Y;
    return (v == 4 || v == -4) && (X - B * Y) % 2 == 0;
  };
  for (long y = 1; y <= 1000; ++y) {
    Integer Y(y);
    for (int sign : {-1, 1}) {
      Integer t = D * Y * Y + 4 * sign;
      if (t > 0 && is_square(t) && admissible(isqrt(t), Y)) return {isqrt(t), Y};
    }
  }
  // Convergents p/q of sqrt(D); every solution with Y > 1000 appears as (X/2, Y/2)
  // or (X, Y) among them since |X/Y - sqrt(D)| < 1/(2Y^2) for D > 16.
  Integer a0 = isqrt(D);
  Integer m = 0, den = 1, a = a0;
  Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (int iter = 0; iter < 100000; ++iter) {
    for (const Integer& scale : {Integer(1), Integer(2)}) {
      Integer X = p * scale, Y = q * scale;
      if (Y > 1000 && admissible(X, Y)) return {X, Y};
    }
    m = den * a - m;
    den = (D - m * m) / den;
    a = (a0 + m) / den;
    Integer pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
  }
  fail(ErrorKind::Internal, "continued fraction search for a unit did not terminate");
}

}  // namespace

FieldElement fundamental_unit_real_quadratic(const NumberField& K) {
  if (K.degree != 2 || K.r1 != 2)
    fail(ErrorKind::Unsupported, "fundamental unit is only computed for real quadratic fields, got degree " +
                                     std::to_string(K.degree) + " with " + std::to_string(K.r1) + " real places");
  const Integer& C = K.min_poly[0];
  const Integer& B = K.min_poly[1];
  Integer D = B * B - 4 * C;
  auto [X, Y] = smallest_solution(D, B);
  // θ = (-B + sqrt(D)) / 2, so (X + Y sqrt(D)) / 2 = (X + B Y) / 2 + Y θ.
  FieldElement u;
  u.coeffs = {Rational((X + B * Y) / 2), Rational(Y)};
  Rational N = norm(K, u);
  require(N == 1 || N == -1, ErrorKind::Internal, "fundamental unit has norm " + N.get_str());
  return u;
}

}  // namespace rkt::numfield
