#include "rkt/abgrp/colimit.hpp"

#include "rkt/abgrp/snf.hpp"
#include "rkt/core/lattice.hpp"

#include <algorithm>
#include <queue>

namespace rkt::abgrp {

namespace {

std::vector<Relation> kernel_relations(const IntMatrix& P) {
  std::vector<Relation> out;
  IntMatrix K = integer_kernel(P);
  for (std::size_t c = 0; c < K.cols(); ++c) {
    IntVector pos(K.rows()), neg(K.rows());
    for (std::size_t i = 0; i < K.rows(); ++i) {
      if (K(i, c) > 0) pos[i] = K(i, c);
      if (K(i, c) < 0) neg[i] = -K(i, c);
    }
    require(P * pos == P * neg, ErrorKind::Internal, "relation failed re-verification");
    out.push_back({1, pos, 1, neg});
  }
  return out;
}

ColimitReport explicit_colimit(const DirectedSystem& sys) {
  std::size_t T = *sys.length();
  ColimitReport rep;
  std::size_t prev = sys.dim_at(1);
  IntMatrix P = IntMatrix::identity(prev);
  for (std::size_t j = 1; j <= T; ++j) {
    P = sys.step(j) * P;
    std::size_t r = rank(P);
    require(r <= prev, ErrorKind::Internal, "window rank increased");
    prev = r;
  }
  rep.eventual_rank = prev;
  IntMatrix L = saturate(P);
  rep.stable_basis = L;
  // Level-1 generators in coordinates of the saturated image.
  IntMatrix C = to_integer(solve_left(L, to_rational(P)));
  GroupDescriptor g;
  for (const auto& delta : elementary_divisors(C)) {
    if (delta == 0) continue;
    if (delta == 1) {
      g += GroupDescriptor::free(1);
      rep.directions.push_back("divisor 1: Z");
    } else {
      g += GroupDescriptor::localized(PrimeSet::of(prime_divisors(delta)));
      rep.directions.push_back("divisor " + delta.get_str() + ": divisibility observed");
      rep.truncated = true;
    }
  }
  rep.invariants = g;
  rep.relations = kernel_relations(P);
  if (rep.truncated)
    rep.notes.push_back("explicit chain: divisible summands are lower bounds observed over " + std::to_string(T) + " steps");
  return rep;
}

// Order in which i precedes j whenever M(i,j) != 0; nullopt if none exists.
std::optional<std::vector<std::size_t>> triangular_order(const PolyMatrix& M) {
  std::size_t k = M.rows();
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && !M(i, j).is_zero()) ++indeg[j];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < k; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && !M(i, j).is_zero() && --indeg[j] == 0) ready.push(j);
  }
  if (order.size() != k) return std::nullopt;
  return order;
}

PolyMatrix permute(const PolyMatrix& M, const std::vector<std::size_t>& order) {
  PolyMatrix P(M.rows(), M.cols());
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) P(a, b) = M(order[a], order[b]);
  return P;
}

PolyMatrix times(const PolyMatrix& M, const IntMatrix& B) {
  PolyMatrix out(M.rows(), B.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      for (std::size_t t = 0; t < M.cols(); ++t)
        if (B(t, j) != 0) out(i, j) += M(i, t) * Poly(Rational(B(t, j)));
  return out;
}

// Law restricted to the invariant lattice with flag basis B: M B = B X.
PolyMatrix restrict_law(const PolyMatrix& M, const FlagBasis& fb) {
  const IntMatrix& B = fb.basis;
  std::size_t r = B.cols();
  // Rows at the pivots form an invertible lower-triangular block.
  RatMatrix Bp(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) Bp(a, b) = Rational(B(fb.pivots[a], b));
  RatMatrix Linv = inverse(Bp);
  PolyMatrix MB = times(M, B);
  PolyMatrix X(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t t = 0; t < r; ++t)
        if (Linv(a, t) != 0) X(a, b) += Poly(Linv(a, t)) * MB(fb.pivots[t], b);
  return X;
}

struct Monomial {
  Integer coeff;
  unsigned exp;
};

std::optional<Monomial> as_monomial(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  int nonzero = 0;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) ++nonzero;
  if (nonzero != 1 || p.lead().get_den() != 1) return std::nullopt;
  return Monomial{p.lead().get_num(), static_cast<unsigned>(p.degree())};
}

std::string type_name(const PrimeSet& s) {
  if (s.empty()) return "Z";
  if (s.is_all()) return "Q";
  return "Loc(" + s.to_string() + ")";
}

ColimitReport symbolic_colimit(const DirectedSystem& sys) {
  const ScalingLaw& law = sys.law();
  std::size_t k = law.dim();
  ColimitReport rep;
  auto order = triangular_order(law.matrix);
  if (!order)
    fail(ErrorKind::Unsupported,
         "scaling law is not triangular under any basis permutation; only simultaneously triangularizable systems are classified");
  PolyMatrix M = permute(law.matrix, *order);

  std::vector<Integer> samples;
  int D = law.max_degree();
  for (std::size_t i = 1; samples.size() < static_cast<std::size_t>(D + 2); ++i) {
    Integer d = law.chain.at(i);
    if (std::find(samples.begin(), samples.end(), d) == samples.end()) samples.push_back(d);
    if (law.chain.kind == Chain::Kind::Constant) break;
  }

  FlagBasis fb{IntMatrix::identity(k), {}};
  for (std::size_t i = 0; i < k; ++i) fb.pivots.push_back(i);
  PolyMatrix X = M;
  std::size_t depth = 0;
  for (;;) {
    bool stable = true;
    for (std::size_t t = 0; t < X.rows(); ++t)
      if (X(t, t).is_zero()) stable = false;
    if (stable) break;
    std::vector<std::vector<Integer>> cols;
    for (const auto& d : samples) {
      IntMatrix img = evaluate_integral(M, d) * fb.basis;
      for (std::size_t c = 0; c < img.cols(); ++c) cols.push_back(img.column(c));
    }
    FlagBasis next = flag_basis(saturate(IntMatrix::from_columns(cols, k)));
    if (next.basis.cols() >= fb.basis.cols())
      fail(ErrorKind::Unsupported, "image does not shrink although a stable direction is killed at every step; "
                                   "law is not simultaneously triangularizable on its eventual image");
    fb = std::move(next);
    X = restrict_law(M, fb);
    ++depth;
  }
  // Cross-check the restriction at the sample points.
  for (const auto& d : samples)
    require(evaluate_integral(M, d) * fb.basis == fb.basis * evaluate_integral(X, d), ErrorKind::Internal,
            "restricted law does not commute with the inclusion");

  std::size_t r = X.rows();
  std::vector<PrimeSet> types(r);
  for (std::size_t t = 0; t < r; ++t) {
    auto mono = as_monomial(X(t, t));
    if (!mono)
      fail(ErrorKind::Unsupported, "stable diagonal entry " + X(t, t).to_string("d") + " is not of the form c*d^e");
    PrimeSet s = abs(mono->coeff) == 1 ? PrimeSet::none() : PrimeSet::of(prime_divisors(mono->coeff));
    if (mono->exp > 0) s = s.unite(law.chain.primes());
    types[t] = s;
    rep.directions.push_back(X(t, t).to_string("d") + ": " + type_name(s));
  }
  // Transitive closure of the coupling graph i -> j (X(i,j) != 0, i < j).
  std::vector<std::vector<bool>> reach(r, std::vector<bool>(r, false));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!X(i, j).is_zero()) {
        reach[i][j] = true;
        for (std::size_t h = 0; h < i; ++h)
          if (reach[h][i]) reach[h][j] = true;
      }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (reach[i][j] && !types[i].includes(types[j]))
        fail(ErrorKind::Unsupported, "coupled directions " + std::to_string(i) + " -> " + std::to_string(j) +
                                         " may form a non-split extension (" + type_name(types[i]) + " does not absorb " +
                                         type_name(types[j]) + ")");

  GroupDescriptor g;
  for (const auto& s : types) g += GroupDescriptor::localized(s);
  rep.invariants = g;
  rep.truncated = false;
  rep.eventual_rank = r;
  rep.reduction_depth = depth;
  IntMatrix basis(k, r);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < r; ++c) basis((*order)[a], c) = fb.basis(a, c);
  rep.stable_basis = basis;
  if (depth > 0) rep.relations = kernel_relations(compose_window(sys, 1, depth));
  return rep;
}

}  // namespace

ColimitReport colimit(const DirectedSystem& sys) {
  return sys.is_symbolic() ? symbolic_colimit(sys) : explicit_colimit(sys);
}

IdentifyResult identified(const DirectedSystem& sys, std::size_t li, const IntVector& v, std::size_t lj, const IntVector& w,
                          std::optional<std::size_t> horizon) {
  require(li >= 1 && li <= lj, ErrorKind::Input, "identified() needs 1 <= level_i <= level_j");
  require(v.size() == sys.dim_at(li), ErrorKind::Input, "first vector has the wrong dimension for its level");
  require(w.size() == sys.dim_at(lj), ErrorKind::Input, "second vector has the wrong dimension for its level");
  // Difference at level j; identified iff it eventually maps to zero.
  IntVector x = transition(sys, li, lj) * v;
  for (std::size_t t = 0; t < x.size(); ++t) x[t] -= w[t];
  IdentifyResult res;
  if (sys.is_symbolic()) {
    std::size_t s = colimit(sys).reduction_depth;
    std::size_t m = lj + s;
    res.exact = true;
    res.decided_at = m;
    IntVector y = transition(sys, lj, m) * x;
    res.identified = std::all_of(y.begin(), y.end(), [](const Integer& z) { return z == 0; });
    return res;
  }
  std::size_t last = *sys.length() + 1;
  if (horizon) last = std::min(last, *horizon);
  IntVector y = x;
  for (std::size_t m = lj;; ++m) {
    res.decided_at = m;
    if (std::all_of(y.begin(), y.end(), [](const Integer& z) { return z == 0; })) {
      res.identified = true;
      return res;
    }
    if (m >= last) break;
    y = sys.step(m) * y;
  }
  return res;
}

}  // namespace rkt::abgrp
