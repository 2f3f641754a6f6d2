#include "rkt/ktheory/pv.hpp"

#include "rkt/core/lattice.hpp"

#include <numeric>

namespace rkt::ktheory {

using abgrp::cokernel;

const char* resolution_name(Resolution r) {
  switch (r) {
    case Resolution::RequireSplit: return "require_split";
    case Resolution::ElementaryDivisors: return "elementary_divisors";
    case Resolution::ReportBoth: return "report_both";
  }
  return "";
}

Resolution parse_resolution(const std::string& s) {
  if (s == "require_split") return Resolution::RequireSplit;
  if (s == "elementary_divisors") return Resolution::ElementaryDivisors;
  if (s == "report_both") return Resolution::ReportBoth;
  fail(ErrorKind::Input, "unknown resolution '" + s + "' (expected require_split, elementary_divisors or report_both)");
}

namespace {

std::size_t generator_count(const GroupDescriptor& g) { return g.free_rank() + g.torsion().size(); }

// Relation matrix of F on its generators: zero for free, order for torsion.
IntMatrix relation_matrix(const GroupDescriptor& F) {
  std::size_t N = generator_count(F);
  IntMatrix R(N, N);
  for (std::size_t i = 0; i < F.torsion().size(); ++i) R(F.free_rank() + i, F.free_rank() + i) = F.torsion()[i];
  return R;
}

void check_well_defined(const GroupDescriptor& F, const IntMatrix& phi) {
  std::size_t a = F.free_rank(), N = generator_count(F);
  require(phi.rows() == N && phi.cols() == N, ErrorKind::Input,
          "action matrix must be " + std::to_string(N) + "x" + std::to_string(N) + " on " + F.to_string());
  for (std::size_t j = a; j < N; ++j) {
    const Integer& k = F.torsion()[j - a];
    for (std::size_t i = 0; i < N; ++i) {
      Integer v = k * phi(i, j);
      bool ok = i < a ? v == 0 : v % F.torsion()[i - a] == 0;
      require(ok, ErrorKind::Input, "action is not well defined on torsion generator " + std::to_string(j));
    }
  }
}

}  // namespace

DegreeHomology endomorphism_homology(const GroupDescriptor& F, const IntMatrix& phi) {
  require(!F.has_local_non_q() && F.q_rank() == 0, ErrorKind::Internal, "endomorphism_homology expects Z^a + torsion");
  check_well_defined(F, phi);
  std::size_t N = generator_count(F);
  DegreeHomology h;
  if (N == 0) return h;
  IntMatrix R = relation_matrix(F);
  IntMatrix both(N, 2 * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      both(i, j) = phi(i, j);
      both(i, N + j) = R(i, j);
    }
  h.coker = cokernel(both);
  // {x : phi x ∈ im R} / im R.
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) both(i, N + j) = -R(i, j);
  IntMatrix K = integer_kernel(both);
  IntMatrix lifted = lattice_basis(K.block(0, 0, N, K.cols()));
  if (lifted.cols() == 0) return h;
  IntMatrix C = to_integer(solve_left(lifted, to_rational(R)));
  h.ker = cokernel(C);
  return h;
}

namespace {

struct SplitGroups {
  GroupDescriptor F;
  std::size_t q = 0;
};

SplitGroups split(const GroupDescriptor& g) {
  if (g.has_local_non_q())
    fail(ErrorKind::Unsupported, "Pimsner-Voiculescu step supports Z, Z/k and Q summands only, got " + g.to_string());
  GroupDescriptor F = GroupDescriptor::free(g.free_rank());
  for (const auto& t : g.torsion()) F += GroupDescriptor::cyclic(t);
  return {F, g.q_rank()};
}

DegreeHomology degree_homology(const GroupDescriptor& g, const DegreeAction& act, int j) {
  SplitGroups s = split(g);
  std::size_t N = generator_count(s.F);
  std::string where = " in degree " + std::to_string(j);
  require(act.integral.rows() == N && act.integral.cols() == N, ErrorKind::Input, "integral block has the wrong size" + where);
  require(act.rational.rows() == s.q && act.rational.cols() == s.q, ErrorKind::Input, "rational block has the wrong size" + where);
  require(act.mixing.rows() == s.q && act.mixing.cols() == N, ErrorKind::Input, "mixing block has the wrong size" + where);

  // The action must be an automorphism.
  DegreeHomology inv = endomorphism_homology(s.F, act.integral);
  require(inv.ker.is_zero() && inv.coker.is_zero(), ErrorKind::Input, "action is not invertible on the integral part" + where);
  require(s.q == 0 || determinant(act.rational) != 0, ErrorKind::Input, "action is not invertible on the rational part" + where);

  IntMatrix phi = act.integral - IntMatrix::identity(N);
  RatMatrix phiQ = act.rational - RatMatrix::identity(s.q);
  DegreeHomology h = endomorphism_homology(s.F, phi);
  std::size_t nullity = s.q - rank(phiQ);
  if (act.mixing.is_zero()) {
    h.ker += GroupDescriptor::rationals(nullity);
    h.coker += GroupDescriptor::rationals(nullity);
  } else if (nullity != 0) {
    fail(ErrorKind::Unsupported, "mixing from Z/torsion into Q with non-invertible (act - id) on Q" + where);
  }
  // With mixing and (act - id) invertible on Q, the snake lemma leaves ker/coker of the F part.
  return h;
}

// Ext(A, B) = 0 for the summand kinds handled here.
bool ext_vanishes(const GroupDescriptor& A, const GroupDescriptor& B) {
  bool a_has_q = A.q_rank() > 0;
  if ((a_has_q || !A.torsion().empty()) && B.free_rank() > 0) return false;
  for (const auto& k : A.torsion())
    for (const auto& t : B.torsion())
      if (gcd(k, t) != 1) return false;
  return true;
}

}  // namespace

PVResult pv_step(const GradedKGroup& g, const ActionDescriptor& act, Resolution resolution) {
  PVResult r;
  for (int j = 0; j < 2; ++j) r.homology[j] = degree_homology(g[j], act.degree[j], j);
  const auto& h0 = r.homology[0];
  const auto& h1 = r.homology[1];
  r.forced_split = ext_vanishes(h1.ker, h0.coker) && ext_vanishes(h0.ker, h1.coker);
  GradedKGroup split_group{h0.coker + h1.ker, h1.coker + h0.ker, g.grading_offset};
  if (r.forced_split) {
    r.resolved = true;
    r.group = split_group;
    r.note = "extensions split: Ext vanishes";
    return r;
  }
  switch (resolution) {
    case Resolution::RequireSplit:
      fail(ErrorKind::Ambiguous, "extension not determined by ker/coker: K0' is an extension of " + h1.ker.to_string() +
                                     " by " + h0.coker.to_string() + ", K1' of " + h0.ker.to_string() + " by " +
                                     h1.coker.to_string());
    case Resolution::ElementaryDivisors:
      r.resolved = true;
      r.group = split_group;
      r.note = "extension resolved by elementary-divisor normalization (split choice)";
      return r;
    case Resolution::ReportBoth:
      r.resolved = false;
      r.note = "extension left unresolved; ker/coker pairs reported";
      return r;
  }
  return r;
}

ActionDescriptor ActionDescriptor::identity(const GradedKGroup& g) {
  ActionDescriptor a;
  for (int j = 0; j < 2; ++j) {
    SplitGroups s = split(g[j]);
    std::size_t N = generator_count(s.F);
    a.degree[j] = {IntMatrix::identity(N), RatMatrix::identity(s.q), RatMatrix(s.q, N)};
  }
  return a;
}

ActionDescriptor ActionDescriptor::integral_only(const GradedKGroup& g, const IntMatrix& m0, const IntMatrix& m1) {
  ActionDescriptor a = identity(g);
  a.degree[0].integral = m0;
  a.degree[1].integral = m1;
  return a;
}

static IntMatrix alternating(std::size_t N) {
  IntMatrix m(N, N);
  for (std::size_t i = 0; i < N; ++i) m(i, i) = i % 2 == 0 ? 1 : -1;
  return m;
}

GradedKGroup involution_domain(unsigned m) {
  if (m == 0) return {GroupDescriptor::free(1), GroupDescriptor(), Grading::Even};
  std::size_t N = std::size_t(1) << m;
  return {GroupDescriptor::free(N), GroupDescriptor::free(N), Grading::Even};
}

ActionDescriptor involution_action(unsigned m) {
  GradedKGroup g = involution_domain(m);
  return ActionDescriptor::integral_only(g, alternating(g.k0.free_rank()), alternating(g.k1.free_rank()));
}

}  // namespace rkt::ktheory
