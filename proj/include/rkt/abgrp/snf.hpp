#pragma once

#include "rkt/core/matrix.hpp"

namespace rkt::abgrp {

// A = U * D * V with U, V unimodular, D diagonal (rectangular), d_i | d_{i+1}, d_i >= 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& A);

// Diagonal of the Smith form only (no transforms).
std::vector<Integer> elementary_divisors(const IntMatrix& A);

}  // namespace rkt::abgrp
