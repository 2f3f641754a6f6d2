#include "rkt/ktheory/kappa.hpp"

#include <algorithm>
#include <bit>

namespace rkt::ktheory {

std::vector<unsigned> graded_lex_subsets(unsigned n) {
  require(n >= 1 && n <= 16, ErrorKind::Input, "field degree must be between 1 and 16 for exterior bases");
  std::vector<unsigned> all;
  for (unsigned m = 0; m < (1u << n); ++m) all.push_back(m);
  auto elems = [](unsigned m) {
    std::vector<unsigned> e;
    for (unsigned i = 0; i < 32; ++i)
      if (m >> i & 1u) e.push_back(i + 1);
    return e;
  };
  std::sort(all.begin(), all.end(), [&](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return elems(a) < elems(b);
  });
  return all;
}

std::vector<unsigned> even_subsets(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned m : graded_lex_subsets(n))
    if (std::popcount(m) % 2 == 0) out.push_back(m);
  return out;
}

std::string subset_label(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < 32; ++i)
    if (mask >> i & 1u) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

IntMatrix KappaMatrix::fin_block() const { return matrix.block(0, 0, fin_size(), fin_size()); }
IntMatrix KappaMatrix::inf_block() const { return matrix.block(fin_size(), fin_size(), inf_size(), inf_size()); }
IntMatrix KappaMatrix::mixing_block() const { return matrix.block(fin_size(), 0, inf_size(), fin_size()); }

std::vector<std::string> KappaMatrix::basis_labels() const {
  std::vector<std::string> out;
  for (unsigned m : graded_lex_subsets(n)) out.push_back("fin" + subset_label(m));
  for (unsigned m : even_subsets(n)) out.push_back("inf" + subset_label(m));
  return out;
}

namespace {

KappaMatrix blank(unsigned n, const Integer& d) {
  KappaMatrix k;
  k.n = n;
  k.d = d;
  std::size_t N = (std::size_t(1) << n) + (std::size_t(1) << (n - 1));
  k.matrix = IntMatrix(N, N);
  return k;
}

void fill_inf_diagonal(KappaMatrix& k, const Integer& scale) {
  auto inf = even_subsets(k.n);
  for (std::size_t i = 0; i < inf.size(); ++i)
    k.matrix(k.fin_size() + i, k.fin_size() + i) = ipow(scale, k.n - std::popcount(inf[i]));
}

KappaMatrix kappa_two(unsigned n) {
  KappaMatrix k = blank(n, 2);
  std::size_t F = k.fin_size();
  for (std::size_t i = 0; i < F; ++i) k.matrix(i, 0) = 1;
  for (std::size_t j = 1; j < F; ++j) k.matrix(F, j) = ipow(2, n - 1);
  fill_inf_diagonal(k, 2);
  return k;
}

KappaMatrix kappa_odd(unsigned n, const Integer& d) {
  KappaMatrix k = blank(n, d);
  std::size_t F = k.fin_size();
  Integer lift = (ipow(d, n) - 1) / 2;
  for (std::size_t j = 0; j < F; ++j) {
    k.matrix(j, j) = 1;
    k.matrix(F, j) = lift;
  }
  fill_inf_diagonal(k, d);
  return k;
}

// κ_{2o} for odd o. The entry under nonempty fin generators is 2^(n-1) o^n,
// which is what κ_2 κ_o gives.
KappaMatrix kappa_two_odd(unsigned n, const Integer& o) {
  KappaMatrix k = blank(n, 2 * o);
  std::size_t F = k.fin_size();
  Integer h = ipow(2, n - 1);
  for (std::size_t i = 0; i < F; ++i) k.matrix(i, 0) = 1;
  k.matrix(F, 0) = h * ipow(o, n) - h;
  for (std::size_t j = 1; j < F; ++j) k.matrix(F, j) = h * ipow(o, n);
  fill_inf_diagonal(k, 2 * o);
  return k;
}

}  // namespace

KappaMatrix kappa(unsigned n, const Integer& d) {
  require(n >= 1, ErrorKind::Input, "kappa needs n >= 1");
  require(d >= 2, ErrorKind::Input, "kappa needs d >= 2, got " + d.get_str());
  Integer o = d;
  unsigned a = 0;
  while (o % 2 == 0) {
    o /= 2;
    ++a;
  }
  if (a == 0) return kappa_odd(n, o);
  KappaMatrix k = o == 1 ? kappa_two(n) : kappa_two_odd(n, o);
  if (a > 1) {
    IntMatrix two = kappa_two(n).matrix;
    for (unsigned i = 1; i < a; ++i) k.matrix = two * k.matrix;
  }
  k.d = d;
  return k;
}

IntMatrix kappa_rational_case_order(const KappaMatrix& k) {
  require(k.n == 1, ErrorKind::Input, "the rational-case ordering exists only for n = 1");
  IntMatrix r(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = k.matrix(2 - i, 2 - j);
  return r;
}

IntMatrix kappa_inf(unsigned n, const Integer& d) {
  require(d >= 1, ErrorKind::Input, "kappa_inf needs d >= 1");
  auto subsets = graded_lex_subsets(n);
  IntMatrix m(subsets.size(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) m(i, i) = ipow(d, n - std::popcount(subsets[i]));
  return m;
}

}  // namespace rkt::ktheory
