#include "rkt/numfield/field.hpp"

#include "rkt/numfield/real_roots.hpp"

#include <cctype>
#include <map>

namespace rkt::numfield {

const char* code_name(FieldSpecError code) {
  switch (code) {
    case FieldSpecError::Malformed: return "malformed";
    case FieldSpecError::NonMonic: return "non-monic";
    case FieldSpecError::Reducible: return "reducible";
  }
  return "malformed";
}

static void malformed(const std::string& spec, const std::string& why) {
  throw FieldSpecException(FieldSpecError::Malformed, "malformed field spec '" + spec + "': " + why);
}

ZPoly parse_polynomial(const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) malformed(spec, "empty");
  std::map<unsigned long, Integer> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      malformed(spec, "expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    bool has_coeff = i > start;
    Integer coeff = has_coeff ? Integer(s.substr(start, i - start)) : Integer(1);
    unsigned long power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) malformed(spec, "'*' without a coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'x') malformed(spec, "expected x after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ps) malformed(spec, "missing exponent after '^'");
        if (i - ps > 4) malformed(spec, "exponent too large");
        power = std::stoul(s.substr(ps, i - ps));
      }
    } else if (!has_coeff) {
      malformed(spec, "unexpected character at position " + std::to_string(i));
    }
    terms[power] += sign * coeff;
  }
  ZPoly f;
  for (auto& [k, c] : terms) {
    if (f.size() <= k) f.resize(k + 1);
    f[k] += c;
  }
  trim(f);
  return f;
}

std::string NumberField::spec() const { return to_poly(min_poly).to_string("x"); }

NumberField make_field(const ZPoly& f0) {
  ZPoly f = f0;
  trim(f);
  std::string text = f.empty() ? "0" : to_poly(f).to_string("x");
  if (degree(f) < 1) malformed(text, "need a polynomial of degree >= 1");
  if (f.back() != 1)
    throw FieldSpecException(FieldSpecError::NonMonic,
                             "field polynomial '" + text + "' is not monic (leading coefficient " + f.back().get_str() + ")");
  if (!is_irreducible(f)) {
    std::string factors;
    for (auto& [g, m] : factor_monic(f)) {
      if (!factors.empty()) factors += " * ";
      factors += "(" + to_poly(g).to_string("x") + ")";
      if (m > 1) factors += "^" + std::to_string(m);
    }
    throw FieldSpecException(FieldSpecError::Reducible, "field polynomial '" + text + "' is reducible: " + factors);
  }
  NumberField K;
  K.min_poly = f;
  K.degree = static_cast<std::size_t>(degree(f));
  Poly p = to_poly(f);
  K.real_roots = isolate_real_roots(p);
  K.r1 = K.real_roots.size();
  require(count_real_roots(p) == K.r1, ErrorKind::Internal, "Sturm count disagrees with isolation");
  require((K.degree - K.r1) % 2 == 0, ErrorKind::Internal, "r1 and n have different parity");
  K.r2 = (K.degree - K.r1) / 2;
  K.discriminant_of_poly = discriminant(f);
  K.roots_of_unity_order = roots_of_unity_order(K);
  return K;
}

NumberField parse_field(const std::string& spec) { return make_field(parse_polynomial(spec)); }

std::pair<std::size_t, std::size_t> signature(const NumberField& field) { return {field.r1, field.r2}; }

}  // namespace rkt::numfield
