#include "rkt/ktheory/graded.hpp"

namespace rkt::ktheory {

const char* grading_name(Grading g) { return g == Grading::Even ? "even" : "odd"; }

Grading parse_grading(const std::string& s) {
  if (s == "even") return Grading::Even;
  if (s == "odd") return Grading::Odd;
  fail(ErrorKind::Input, "grading offset must be 'even' or 'odd', got '" + s + "'");
}

GradedKGroup GradedKGroup::shifted() const {
  return {k1, k0, grading_offset == Grading::Even ? Grading::Odd : Grading::Even};
}

std::string GradedKGroup::to_string() const { return "(K0 = " + k0.to_string() + ", K1 = " + k1.to_string() + ")"; }

Integer exterior_graded_ranks(unsigned long r, int parity) {
  Integer s = 0;
  for (unsigned long k = (parity % 2 == 0) ? 0 : 1; k <= r; k += 2) s += binomial(r, k);
  return s;
}

}  // namespace rkt::ktheory
