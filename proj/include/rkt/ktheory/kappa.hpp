#pragma once

#include "rkt/core/matrix.hpp"

#include <string>
#include <vector>

namespace rkt::ktheory {

// Subsets of {1..n} as bitmasks (bit i-1 for element i), graded-lex order.
std::vector<unsigned> graded_lex_subsets(unsigned n);
std::vector<unsigned> even_subsets(unsigned n);
std::string subset_label(unsigned mask);

// Structure matrix of κ_d on G_fin ⊕ G_inf. G_fin has one generator per subset
// of {1..n} (graded-lex, the empty set first); G_inf one per even-size subset,
// the empty set being the class of the unit. Column j is the image of generator j.
struct KappaMatrix {
  unsigned n = 0;
  Integer d;
  IntMatrix matrix;

  std::size_t fin_size() const { return std::size_t(1) << n; }
  std::size_t inf_size() const { return std::size_t(1) << (n - 1); }
  IntMatrix fin_block() const;
  IntMatrix inf_block() const;
  IntMatrix mixing_block() const;  // inf rows, fin columns
  std::vector<std::string> basis_labels() const;
};

KappaMatrix kappa(unsigned n, const Integer& d);

// n = 1 only: the same map in the ordered basis (unit class, q, p) used for the
// rational case, i.e. generators (inf ∅, fin {1}, fin ∅).
IntMatrix kappa_rational_case_order(const KappaMatrix& k);

// Diagonal scaling d^(n-|I|) on the exterior basis (all subsets, graded-lex).
IntMatrix kappa_inf(unsigned n, const Integer& d);

}  // namespace rkt::ktheory
