#pragma once

#include "rkt/abgrp/colimit.hpp"
#include "rkt/ktheory/graded.hpp"
#include "rkt/ktheory/kappa.hpp"

namespace rkt::ktheory {

GradedKGroup k_of_B0_closed(unsigned n);
GradedKGroup k_of_A0_closed(unsigned n);

// Symbolic laws handed to the colimit engine.
abgrp::ScalingLaw b0_law(unsigned n, int parity);  // exterior classes of degree ≡ parity
abgrp::ScalingLaw a0_law(unsigned n);              // κ_{2d} along odd d
// Z^3 with M(d) = [[2d, d, d-1], [0, 0, 1], [0, 0, 1]] along odd d: the n = 1 case
// of a0_law written in the ordered basis (unit class, q, p).
abgrp::ScalingLaw rational_case_law();

// Closed form, asserted equal to the engine (CrossCheck error otherwise).
GradedKGroup k_of_B0(unsigned n);
GradedKGroup k_of_A0(unsigned n);

// (Z^{2^{m-1}}, Z^{2^{m-1}}) via iterated Pimsner-Voiculescu steps from k_of_A0(1).
GradedKGroup k_of_A_truncated_Q(unsigned m);

// Truncation m of K_*(C_0(A) ⋊ Q ⋊ Q*): rank-2 factor times Λ(Z^m).
GradedKGroup k_full_adele_Q(unsigned m);

}  // namespace rkt::ktheory
