#pragma once

#include "rkt/numfield/field.hpp"

#include <string>
#include <vector>

namespace rkt::numfield {

// Coefficients in the power basis 1, θ, ..., θ^(n-1).
struct FieldElement {
  std::vector<Rational> coeffs;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement reduce(const NumberField& K, const Poly& p);
FieldElement from_rational(const NumberField& K, const Rational& q);
// "1,1" is 1 + θ; fewer than n entries are padded with zeros, more is an error
// unless the extra entries reduce away (they are treated as higher powers of θ).
FieldElement parse_element(const NumberField& K, const std::string& text);
// Elements separated by ';'.
std::vector<FieldElement> parse_elements(const NumberField& K, const std::string& text);

Poly to_poly(const FieldElement& a);
bool is_zero(const FieldElement& a);
FieldElement add(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement sub(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement mul(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement inverse(const NumberField& K, const FieldElement& a);  // throws Input on zero
Rational norm(const NumberField& K, const FieldElement& a);
std::string to_string(const FieldElement& a);  // "1,1"
std::string pretty(const FieldElement& a);     // "1+θ" rendered with t

// Signs under the real embeddings, ordered by ascending real root.
std::vector<int> real_sign_vector(const NumberField& K, const FieldElement& b);
int sign_parity(const NumberField& K, const FieldElement& b);

enum class ResidueStyle { Standard, Centered };
struct ResidueSystem {
  unsigned long modulus = 1;
  ResidueStyle style = ResidueStyle::Standard;
  std::vector<std::vector<long>> representatives;  // power-basis coordinates
};
ResidueStyle parse_style(const std::string& s);
const char* style_name(ResidueStyle s);
ResidueSystem residue_system(const NumberField& K, unsigned long d, ResidueStyle style);

// Unit a + bθ (θ the larger root) generating the units of Z[θ] modulo ±1.
FieldElement fundamental_unit_real_quadratic(const NumberField& K);

}  // namespace rkt::numfield
