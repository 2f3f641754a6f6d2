#include "rkt/numfield/real_roots.hpp"

#include <algorithm>

namespace rkt::numfield {

std::vector<Poly> sturm_sequence(const Poly& f) {
  std::vector<Poly> seq{f};
  Poly prev = f, cur = f.derivative();
  while (!cur.is_zero()) {
    seq.push_back(cur);
    Poly r = -divmod(prev, cur).second;
    prev = std::move(cur);
    cur = std::move(r);
  }
  return seq;
}

static std::size_t count_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t sign_changes_at(const std::vector<Poly>& seq, const Rational& t) {
  std::vector<int> signs;
  for (const auto& p : seq) signs.push_back(sgn(p(t)));
  return count_changes(signs);
}

std::size_t sign_changes_at_infinity(const std::vector<Poly>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& p : seq) {
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_changes(signs);
}

std::size_t count_real_roots(const Poly& f) {
  auto seq = sturm_sequence(f);
  return sign_changes_at_infinity(seq, false) - sign_changes_at_infinity(seq, true);
}

namespace {

struct Isolator {
  const Poly& f;
  std::vector<Poly> seq;
  std::vector<RealRoot> out;

  // Roots in (a, b]; f(a), f(b) nonzero; va, vb the sign changes there.
  void split(const Rational& a, std::size_t va, const Rational& b, std::size_t vb) {
    std::size_t n = va - vb;
    if (n == 0) return;
    if (n == 1) {
      out.push_back({a, b});
      return;
    }
    Rational mid = (a + b) / 2;
    if (f(mid) != 0) {
      std::size_t vm = sign_changes_at(seq, mid);
      split(a, va, mid, vm);
      split(mid, vm, b, vb);
      return;
    }
    // Rational root at mid: fence it off with a gap containing no other root.
    Rational delta = (b - a) / 4;
    for (;;) {
      Rational lo = mid - delta, hi = mid + delta;
      if (f(lo) != 0 && f(hi) != 0) {
        std::size_t vl = sign_changes_at(seq, lo), vh = sign_changes_at(seq, hi);
        if (vl - vh == 1) {
          split(a, va, lo, vl);
          out.push_back({mid, mid});
          split(hi, vh, b, vb);
          return;
        }
      }
      delta /= 2;
    }
  }
};

}  // namespace

std::vector<RealRoot> isolate_real_roots(const Poly& f) {
  require(f.degree() >= 1, ErrorKind::Internal, "isolating roots of a constant");
  if (f.degree() == 1) {
    Rational r = -f.coeff(0) / f.coeff(1);
    return {{r, r}};
  }
  Rational bound = 0;
  for (int k = 0; k < f.degree(); ++k) bound = std::max(bound, Rational(abs(f.coeff(k) / f.lead())));
  bound += 1;
  Isolator iso{f, sturm_sequence(f), {}};
  iso.split(-bound, sign_changes_at(iso.seq, -bound), bound, sign_changes_at(iso.seq, bound));
  std::sort(iso.out.begin(), iso.out.end(), [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
  return iso.out;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval horner(const Poly& g, const Interval& x) {
  Interval acc{g.lead(), g.lead()};
  for (int k = g.degree() - 1; k >= 0; --k) {
    acc = mul(acc, x);
    acc.lo += g.coeff(k);
    acc.hi += g.coeff(k);
  }
  return acc;
}

}  // namespace

int sign_at_root(const Poly& f, RealRoot root, const Poly& g) {
  if (g.is_zero()) fail(ErrorKind::Input, "sign of zero is undefined");
  if (g.degree() == 0) return sgn(g.lead());
  int f_lo = root.exact() ? 0 : sgn(f(root.lo));
  for (int iter = 0; iter < 100000; ++iter) {
    if (root.exact()) {
      int s = sgn(g(root.lo));
      if (s == 0) fail(ErrorKind::Input, "element vanishes at a real place");
      return s;
    }
    Interval v = horner(g, {root.lo, root.hi});
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    Rational mid = (root.lo + root.hi) / 2;
    int fm = sgn(f(mid));
    if (fm == 0)
      root = {mid, mid};
    else if (fm == f_lo)
      root.lo = mid;
    else
      root.hi = mid;
  }
  fail(ErrorKind::Input, "element vanishes at a real place (interval refinement did not separate it from 0)");
}

}  // namespace rkt::numfield
