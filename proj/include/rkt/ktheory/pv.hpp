#pragma once

#include "rkt/ktheory/graded.hpp"

#include <optional>
#include <string>

namespace rkt::ktheory {

// Endomorphism of one degree of a graded group G = F ⊕ Q^b, where F = Z^a ⊕ torsion
// has generators in descriptor order (free first, then invariant factors).
// `integral` acts on F's generators, `rational` on Q^b, `mixing` maps F into Q^b.
struct DegreeAction {
  IntMatrix integral;
  RatMatrix rational;
  RatMatrix mixing;  // b x (number of F generators)
};

struct ActionDescriptor {
  DegreeAction degree[2];
  static ActionDescriptor identity(const GradedKGroup& g);
  // Integral part `m0`/`m1`, identity on Q parts, no mixing.
  static ActionDescriptor integral_only(const GradedKGroup& g, const IntMatrix& m0, const IntMatrix& m1);
};

enum class Resolution { RequireSplit, ElementaryDivisors, ReportBoth };
const char* resolution_name(Resolution r);
Resolution parse_resolution(const std::string& s);

struct DegreeHomology {
  GroupDescriptor ker;
  GroupDescriptor coker;
};

// Kernel and cokernel of (act - id) per degree; these agree with those of id - act^{-1}.
// K_0' is an extension of ker_1 by coker_0, K_1' of ker_0 by coker_1.
struct PVResult {
  DegreeHomology homology[2];
  bool forced_split = false;  // Ext vanishes, so the extensions split canonically
  bool resolved = false;
  std::optional<GradedKGroup> group;
  std::string note;
};

PVResult pv_step(const GradedKGroup& g, const ActionDescriptor& act, Resolution resolution);

// Degree-wise homology of an integral endomorphism of Z^a ⊕ torsion given by its
// descriptor; exposed for tests.
DegreeHomology endomorphism_homology(const GroupDescriptor& F, const IntMatrix& phi);

// Alternating diag(1,-1,1,...) on (Z^{2^m}, Z^{2^m}) for m >= 1; diag(1) on (Z, 0) for m = 0.
ActionDescriptor involution_action(unsigned m);
GradedKGroup involution_domain(unsigned m);

}  // namespace rkt::ktheory
