#pragma once

#include "rkt/numfield/zpoly.hpp"

#include <string>
#include <vector>

namespace rkt::numfield {

enum class FieldSpecError { Malformed, NonMonic, Reducible };

class FieldSpecException : public Error {
 public:
  FieldSpecException(FieldSpecError code, const std::string& what) : Error(ErrorKind::Input, what), code_(code) {}
  FieldSpecError code() const noexcept { return code_; }

 private:
  FieldSpecError code_;
};

const char* code_name(FieldSpecError code);

// Isolating interval (lo, hi) for a real root; for rational roots lo == hi == root.
struct RealRoot {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

struct NumberField {
  ZPoly min_poly;  // monic, irreducible
  std::size_t degree = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  Integer discriminant_of_poly;
  unsigned long roots_of_unity_order = 2;
  std::vector<RealRoot> real_roots;  // ascending

  std::size_t unit_rank() const { return r1 + r2 - 1; }
  std::string spec() const;  // canonical spec text
};

// Grammar: terms c*x^k, c x^k, x^k, x, c joined by + and -. Whitespace is ignored.
ZPoly parse_polynomial(const std::string& spec);
NumberField parse_field(const std::string& spec);
// Builds a field from coefficients (validated the same way as parse_field).
NumberField make_field(const ZPoly& min_poly);

std::pair<std::size_t, std::size_t> signature(const NumberField& field);
unsigned long roots_of_unity_order(const NumberField& field);

}  // namespace rkt::numfield
