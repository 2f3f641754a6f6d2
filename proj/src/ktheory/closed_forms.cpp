#include "rkt/ktheory/closed_forms.hpp"

#include "rkt/ktheory/pv.hpp"

#include <bit>

namespace rkt::ktheory {

using abgrp::Chain;
using abgrp::DirectedSystem;
using abgrp::ScalingLaw;

GradedKGroup k_of_B0_closed(unsigned n) {
  require(n >= 1, ErrorKind::Input, "n must be >= 1");
  std::size_t h = std::size_t(1) << (n - 1);
  GroupDescriptor with_top = GroupDescriptor::rationals(h - 1) + GroupDescriptor::free(1);
  GroupDescriptor without = GroupDescriptor::rationals(h);
  // The top class (degree n) is fixed by every scaling, so its degree carries the Z.
  return n % 2 == 0 ? GradedKGroup{with_top, without} : GradedKGroup{without, with_top};
}

GradedKGroup k_of_A0_closed(unsigned n) {
  require(n >= 1, ErrorKind::Input, "n must be >= 1");
  std::size_t h = std::size_t(1) << (n - 1);
  GroupDescriptor k0 = n % 2 == 1 ? GroupDescriptor::free(1) + GroupDescriptor::rationals(h)
                                  : GroupDescriptor::free(2) + GroupDescriptor::rationals(h - 1);
  return {k0, GroupDescriptor()};
}

ScalingLaw b0_law(unsigned n, int parity) {
  auto subsets = graded_lex_subsets(n);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (std::popcount(subsets[i]) % 2 == parity % 2) idx.push_back(i);
  // Entries interpolated from kappa_inf at d = 1..n+1, then checked at n+2 and n+3.
  std::vector<Rational> xs;
  std::vector<IntMatrix> vals;
  for (unsigned d = 1; d <= n + 3; ++d) {
    xs.emplace_back(d);
    vals.push_back(kappa_inf(n, d));
  }
  PolyMatrix M(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      std::vector<Rational> ys;
      for (unsigned t = 0; t <= n; ++t) ys.emplace_back(vals[t](idx[a], idx[b]));
      M(a, b) = interpolate(std::vector<Rational>(xs.begin(), xs.begin() + n + 1), ys);
      for (unsigned t = n + 1; t < xs.size(); ++t)
        require(M(a, b)(xs[t]) == Rational(vals[t](idx[a], idx[b])), ErrorKind::CrossCheck,
                "kappa_inf entry is not polynomial of degree <= n in d");
    }
  return {M, Chain::factorial()};
}

ScalingLaw a0_law(unsigned n) {
  // Structure map between consecutive levels is κ_{2d} for odd d; its entries are
  // polynomials of degree <= n in d.
  std::vector<Rational> xs;
  std::vector<IntMatrix> vals;
  for (unsigned t = 0; t < n + 3; ++t) {
    Integer d = 2 * t + 3;
    xs.emplace_back(d);
    vals.push_back(kappa(n, 2 * d).matrix);
  }
  std::size_t N = vals[0].rows();
  PolyMatrix M(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<Rational> ys;
      for (unsigned t = 0; t <= n; ++t) ys.emplace_back(vals[t](a, b));
      M(a, b) = interpolate(std::vector<Rational>(xs.begin(), xs.begin() + n + 1), ys);
      for (unsigned t = n + 1; t < xs.size(); ++t)
        require(M(a, b)(xs[t]) == Rational(vals[t](a, b)), ErrorKind::CrossCheck,
                "kappa(n, 2d) entry is not polynomial of degree <= n in d");
    }
  return {M, Chain::odd()};
}

ScalingLaw rational_case_law() {
  Poly d = Poly::x();
  PolyMatrix M(3, 3);
  M(0, 0) = Poly(2) * d;
  M(0, 1) = d;
  M(0, 2) = d - Poly(1);
  M(1, 2) = Poly(1);
  M(2, 2) = Poly(1);
  return {M, Chain::odd()};
}

GradedKGroup k_of_B0(unsigned n) {
  GradedKGroup closed = k_of_B0_closed(n);
  GradedKGroup engine{abgrp::colimit(DirectedSystem::symbolic(b0_law(n, 0))).invariants,
                      abgrp::colimit(DirectedSystem::symbolic(b0_law(n, 1))).invariants};
  if (!(engine == closed))
    fail(ErrorKind::CrossCheck, "K_*(B^0) for n = " + std::to_string(n) + ": closed form " + closed.to_string() +
                                    " but colimit engine gives " + engine.to_string());
  return closed;
}

GradedKGroup k_of_A0(unsigned n) {
  GradedKGroup closed = k_of_A0_closed(n);
  GradedKGroup engine{abgrp::colimit(DirectedSystem::symbolic(a0_law(n))).invariants, GroupDescriptor()};
  if (!(engine == closed))
    fail(ErrorKind::CrossCheck, "K_*(A^0) for n = " + std::to_string(n) + ": closed form " + closed.to_string() +
                                    " but colimit engine gives " + engine.to_string());
  return closed;
}

GradedKGroup k_of_A_truncated_Q(unsigned m) {
  require(m >= 1, ErrorKind::Input, "truncation level must be >= 1");
  GradedKGroup g = k_of_A0(1);  // Z + Q in degree 0
  // s_2 acts by 1/2 on the Q summand and trivially on Z.
  ActionDescriptor half = ActionDescriptor::identity(g);
  half.degree[0].rational(0, 0) = Rational(1, 2);
  g = *pv_step(g, half, Resolution::RequireSplit).group;
  for (unsigned i = 1; i < m; ++i) g = *pv_step(g, ActionDescriptor::identity(g), Resolution::RequireSplit).group;
  GroupDescriptor expected = GroupDescriptor::free(std::size_t(1) << (m - 1));
  if (!(g.k0 == expected && g.k1 == expected))
    fail(ErrorKind::CrossCheck, "truncation " + std::to_string(m) + " gives " + g.to_string() + ", expected Z^" +
                                    std::to_string(std::size_t(1) << (m - 1)) + " in both degrees");
  return g;
}

GradedKGroup k_full_adele_Q(unsigned m) {
  GradedKGroup g{GroupDescriptor::free(2), GroupDescriptor(), Grading::Even};
  for (unsigned i = 0; i < m; ++i) g = *pv_step(g, ActionDescriptor::identity(g), Resolution::RequireSplit).group;
  std::size_t e0 = 2 * exterior_graded_ranks(m, 0).get_ui(), e1 = 2 * exterior_graded_ranks(m, 1).get_ui();
  if (!(g.k0 == GroupDescriptor::free(e0) && g.k1 == GroupDescriptor::free(e1)))
    fail(ErrorKind::CrossCheck, "full adele truncation " + std::to_string(m) + " gives " + g.to_string());
  return g;
}

}  // namespace rkt::ktheory
