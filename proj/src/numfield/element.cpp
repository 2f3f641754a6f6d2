#include "rkt/numfield/element.hpp"

#include "rkt/numfield/real_roots.hpp"

#include <sstream>

namespace rkt::numfield {

FieldElement reduce(const NumberField& K, const Poly& p) {
  Poly r = divmod(p, to_poly(K.min_poly)).second;
  FieldElement e;
  e.coeffs.resize(K.degree);
  for (std::size_t k = 0; k < K.degree; ++k) e.coeffs[k] = r.coeff(k);
  return e;
}

FieldElement from_rational(const NumberField& K, const Rational& q) { return reduce(K, Poly(q)); }

FieldElement parse_element(const NumberField& K, const std::string& text) {
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) fail(ErrorKind::Input, "empty field element");
  return reduce(K, Poly(c));
}

std::vector<FieldElement> parse_elements(const NumberField& K, const std::string& text) {
  std::vector<FieldElement> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_element(K, item));
  return out;
}

Poly to_poly(const FieldElement& a) { return Poly(a.coeffs); }

bool is_zero(const FieldElement& a) { return to_poly(a).is_zero(); }

FieldElement add(const NumberField& K, const FieldElement& a, const FieldElement& b) { return reduce(K, to_poly(a) + to_poly(b)); }

FieldElement sub(const NumberField& K, const FieldElement& a, const FieldElement& b) { return reduce(K, to_poly(a) - to_poly(b)); }

FieldElement mul(const NumberField& K, const FieldElement& a, const FieldElement& b) { return reduce(K, to_poly(a) * to_poly(b)); }

FieldElement inverse(const NumberField& K, const FieldElement& a) {
  Poly g = to_poly(a);
  if (g.is_zero()) fail(ErrorKind::Input, "zero has no inverse");
  // Extended Euclid: u*g + v*f = 1.
  Poly r0 = to_poly(K.min_poly), r1 = g, u0, u1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  require(r0.degree() == 0, ErrorKind::Internal, "element not invertible: minimal polynomial not irreducible");
  return reduce(K, u0 * Poly(1 / r0.lead()));
}

Rational norm(const NumberField& K, const FieldElement& a) {
  std::size_t n = K.degree;
  RatMatrix M(n, n);
  Poly x_power(Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement col = reduce(K, to_poly(a) * x_power);
    for (std::size_t i = 0; i < n; ++i) M(i, j) = col.coeffs[i];
    x_power *= Poly::x();
  }
  return determinant(M);
}

std::string to_string(const FieldElement& a) {
  std::string s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += (i ? "," : "") + a.coeffs[i].get_str();
  return s;
}

std::string pretty(const FieldElement& a) { return to_poly(a).to_string("t"); }

std::vector<int> real_sign_vector(const NumberField& K, const FieldElement& b) {
  if (is_zero(b)) fail(ErrorKind::Input, "sign vector of zero is undefined");
  Poly f = to_poly(K.min_poly), g = to_poly(b);
  std::vector<int> signs;
  for (const auto& root : K.real_roots) signs.push_back(sign_at_root(f, root, g));
  return signs;
}

int sign_parity(const NumberField& K, const FieldElement& b) {
  int parity = 1;
  for (int s : real_sign_vector(K, b))
    if (s < 0) parity = -parity;
  return parity;
}

}  // namespace rkt::numfield
