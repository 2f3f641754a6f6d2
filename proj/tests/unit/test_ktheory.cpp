#include <doctest.h>

#include "oracles.hpp"
#include "rkt/ktheory/classify.hpp"
#include "rkt/ktheory/closed_forms.hpp"
#include "rkt/ktheory/kappa.hpp"
#include "rkt/ktheory/pv.hpp"

#include <numeric>

using namespace rkt;
using namespace rkt::ktheory;

namespace {

GroupDescriptor G(const char* s) { return GroupDescriptor::parse(s); }
GradedKGroup GK(const char* k0, const char* k1) { return {G(k0), G(k1)}; }

}  // namespace

TEST_CASE("exterior graded ranks match binomial sums") {
  for (unsigned long r = 0; r <= 24; ++r)
    for (int p : {0, 1}) CHECK(exterior_graded_ranks(r, p) == oracle::binomial_sum(r, p));
  for (unsigned long r = 1; r <= 24; ++r) CHECK(exterior_graded_ranks(r, 0) == ipow(2, r - 1));
  CHECK(exterior_graded_ranks(0, 1) == 0);
}

TEST_CASE("subset bases") {
  auto s = graded_lex_subsets(3);
  std::vector<std::string> labels;
  for (unsigned m : s) labels.push_back(subset_label(m));
  CHECK(labels == std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
  CHECK(even_subsets(3).size() == 4);
  CHECK(kappa(2, 3).basis_labels().size() == 6);
}

TEST_CASE("rational-case structure matrices") {
  CHECK(kappa_rational_case_order(kappa(1, 2)) == IntMatrix::from_rows({{2, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
  for (long d = 3; d <= 41; d += 2) {
    Integer h = (d - 1) / 2;
    CHECK(kappa_rational_case_order(kappa(1, d)) == IntMatrix::from_rows({{Integer(d), h, h}, {0, 1, 0}, {0, 0, 1}}));
  }
  CHECK_THROWS_AS(kappa_rational_case_order(kappa(2, 3)), Error);
  CHECK_THROWS_AS(kappa(2, 1), Error);
}

TEST_CASE("kappa blocks") {
  for (unsigned n = 1; n <= 4; ++n)
    for (long d : {2, 3, 6, 9, 10}) {
      auto k = kappa(n, d);
      CHECK(k.matrix.block(0, k.fin_size(), k.fin_size(), k.inf_size()).is_zero());  // inf never maps into fin
      auto inf = even_subsets(n);
      for (std::size_t i = 0; i < inf.size(); ++i)
        CHECK(k.inf_block()(i, i) == ipow(d, n - std::popcount(inf[i])));
    }
}

TEST_CASE("kappa is multiplicative in d") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (long d = 3; d <= 99; d += 2) CHECK(kappa(n, 2).matrix * kappa(n, d).matrix == kappa(n, 2 * d).matrix);
    for (long d = 2; d <= 12; ++d)
      for (long e = 2; e <= 12; ++e) CHECK(kappa(n, d).matrix * kappa(n, e).matrix == kappa(n, e).matrix * kappa(n, d).matrix);
    for (long d = 3; d <= 15; d += 2)
      for (long e = 3; e <= 15; e += 2) CHECK(kappa(n, d).matrix * kappa(n, e).matrix == kappa(n, d * e).matrix);
  }
}

TEST_CASE("endomorphism homology") {
  auto h = endomorphism_homology(G("Z/4"), IntMatrix::from_rows({{2}}));
  CHECK(h.ker == G("Z/2"));
  CHECK(h.coker == G("Z/2"));
  auto z = endomorphism_homology(G("Z^2"), IntMatrix::from_rows({{0, 0}, {0, -2}}));
  CHECK(z.ker == G("Z"));
  CHECK(z.coker == G("Z + Z/2"));
}

TEST_CASE("PV steps") {
  GradedKGroup z = GK("Z", "0");
  CHECK(*pv_step(z, ActionDescriptor::identity(z), Resolution::RequireSplit).group == GK("Z", "Z"));

  auto neg = ActionDescriptor::integral_only(z, IntMatrix::from_rows({{-1}}), IntMatrix(0, 0));
  CHECK(*pv_step(z, neg, Resolution::ElementaryDivisors).group == GK("Z/2", "0"));

  GradedKGroup zq = GK("Z + Q", "0");
  auto half = ActionDescriptor::identity(zq);
  half.degree[0].rational(0, 0) = Rational(1, 2);
  CHECK(*pv_step(zq, half, Resolution::RequireSplit).group == GK("Z", "Z"));
  CHECK(*pv_step(zq, ActionDescriptor::identity(zq), Resolution::RequireSplit).group == GK("Z + Q", "Z + Q"));
}

TEST_CASE("PV ambiguity handling") {
  // ker_1 = Z/2 and coker_0 = Z + Z/2, so the K_0 extension need not split.
  GradedKGroup g = GK("Z^2", "Z/4");
  auto act = ActionDescriptor::integral_only(g, IntMatrix::from_rows({{1, 2}, {0, 1}}), IntMatrix::from_rows({{3}}));
  try {
    pv_step(g, act, Resolution::RequireSplit);
    FAIL("expected an ambiguity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Ambiguous);
  }
  auto both = pv_step(g, act, Resolution::ReportBoth);
  CHECK_FALSE(both.resolved);
  CHECK_FALSE(both.group.has_value());
  CHECK_FALSE(both.forced_split);
  auto ed = pv_step(g, act, Resolution::ElementaryDivisors);
  CHECK(ed.resolved);
  CHECK(ed.group->k0 == G("Z + (Z/2)^2"));
  CHECK(ed.group->k1 == G("Z + Z/2"));
  CHECK_FALSE(ed.note.empty());
}

TEST_CASE("alternating involution: honest values") {
  for (unsigned m = 1; m <= 5; ++m) {
    auto r = pv_step(involution_domain(m), involution_action(m), Resolution::ElementaryDivisors);
    REQUIRE(r.group);
    std::size_t big = std::size_t(1) << m, half = big / 2;
    GroupDescriptor expected = GroupDescriptor::free(big) + GroupDescriptor::cyclic(2).power(half);
    CHECK(r.group->k0 == expected);
    CHECK(r.group->k1 == expected);
    // ker and coker of an endomorphism of Z^N have equal rank.
    CHECK(r.homology[0].ker.rank() == r.homology[0].coker.rank());
    CHECK(r.homology[0].coker == GroupDescriptor::free(half) + GroupDescriptor::cyclic(2).power(half));
  }
  CHECK(involution_domain(0) == GK("Z", "0"));
}

TEST_CASE("closed forms agree with the colimit engine") {
  CHECK(k_of_B0(1) == GK("Q", "Z"));
  CHECK(k_of_B0(2) == GK("Q + Z", "Q^2"));
  CHECK(k_of_B0(3) == GK("Q^4", "Q^3 + Z"));
  CHECK(k_of_A0(1) == GK("Z + Q", "0"));
  CHECK(k_of_A0(2) == GK("Z^2 + Q", "0"));
  CHECK(k_of_A0(3) == GK("Z + Q^4", "0"));
}

TEST_CASE("rational truncations") {
  for (unsigned m = 1; m <= 8; ++m) {
    auto f = GroupDescriptor::free(std::size_t(1) << (m - 1));
    CHECK(k_of_A_truncated_Q(m) == GradedKGroup{f, f});
  }
  CHECK(k_full_adele_Q(0) == GK("Z^2", "0"));
  CHECK(k_full_adele_Q(3) == GK("Z^8", "Z^8"));
}

TEST_CASE("B classification cases") {
  auto Q = numfield::parse_field("x");
  auto b2 = classify_B(Q, {numfield::parse_element(Q, "2"), numfield::parse_element(Q, "3")}, 3);
  CHECK(b2.case_id == "B2_odd_real_all_even_generators");
  CHECK(b2.grading_offset == Grading::Odd);
  auto b3 = classify_B(Q, {numfield::parse_element(Q, "-2")}, 3);
  CHECK(b3.case_id == "B3_odd_real_some_odd_generator");
  CHECK(b3.truncations[1].group == GK("Z/2", "0").shifted());
  auto cubic = numfield::parse_field("x^3-2");
  auto insufficient = classify_B(cubic, {}, 2);
  CHECK(insufficient.insufficient_data);
  CHECK(insufficient.case_id == "insufficient_gamma_data");
  auto gi = numfield::parse_field("x^2+1");
  auto b1 = classify_B(gi, {}, 3);
  CHECK(b1.case_id == "B1_no_real_places");
  for (const auto& t : b1.truncations) {
    CHECK(t.k0_rank == exterior_graded_ranks(t.m, 0));
    CHECK(t.k1_rank == exterior_graded_ranks(t.m, 1));
  }
  auto r2 = numfield::parse_field("x^2-2");
  auto b4 = classify_B(r2, {numfield::parse_element(r2, "1,1")}, 4);
  CHECK(b4.case_id == "B4_even_real_places");
  CHECK(b4.limit_k0 == "(Z/2) (x) Lambda^even(Gamma)");
  for (const auto& t : b4.truncations)
    if (t.m >= 1) {
      CHECK(t.k0_rank == 0);
      CHECK(t.k0_torsion == exterior_graded_ranks(t.m - 1, 0));
      CHECK(t.k1_torsion == exterior_graded_ranks(t.m - 1, 1));
    }
}

TEST_CASE("A classification cases") {
  CHECK_THROWS_AS(classify_A(numfield::parse_field("x^2+x+1"), 2), Error);
  auto q2 = classify_A(numfield::parse_field("x^2+2"), 3);
  CHECK(q2.case_id == "A_a_no_real_places");
  CHECK(q2.truncations[3].k0_rank == 8);
  auto r2 = numfield::parse_field("x^2-2");
  auto c = classify_A(r2, 3, {numfield::parse_element(r2, "1,1")});
  CHECK(c.case_id == "A_c_even_real_places");
  CHECK(c.truncations[0].group == GK("Z^2", "0"));
  CHECK(c.truncations[1].group == GK("Z + Z/2", "Z"));
  CHECK(c.truncations[3].group == GK("Z^4 + (Z/2)^2", "Z^4 + (Z/2)^2"));
  auto odd = classify_A(numfield::parse_field("x^2-2"), 2, {}, Grading::Odd);
  CHECK(odd.truncations[1].group.k1.two_rank() == 1);
}

TEST_CASE("graded group helpers") {
  auto g = GK("Z", "Q");
  CHECK(g.shifted() == GK("Q", "Z"));
  CHECK(g.shifted().grading_offset == Grading::Odd);
  CHECK(parse_grading("odd") == Grading::Odd);
  CHECK_THROWS_AS(parse_grading("sideways"), Error);
}

TEST_CASE("kappa multiplicative for coprime odd d, d' <= 25") {
  for (unsigned n = 1; n <= 4; ++n)
    for (long d = 3; d <= 25; d += 2)
      for (long e = 3; e <= 25; e += 2)
        if (std::gcd(d, e) == 1) CHECK(kappa(n, d).matrix * kappa(n, e).matrix == kappa(n, d * e).matrix);
}

TEST_CASE("PV with identity action doubles free summands; hexagon rank identity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t a0 = rng() % 4, a1 = rng() % 4;
    GradedKGroup g{GroupDescriptor::free(a0), GroupDescriptor::free(a1)};
    auto id = pv_step(g, ActionDescriptor::identity(g), Resolution::RequireSplit);
    CHECK(id.group->k0 == GroupDescriptor::free(a0 + a1));
    CHECK(id.group->k1 == GroupDescriptor::free(a0 + a1));

    // Random unimodular actions built from elementary operations.
    auto unimodular = [&](std::size_t N) {
      IntMatrix M = IntMatrix::identity(N);
      for (int k = 0; k < 6 && N > 1; ++k) {
        std::size_t i = rng() % N, j = rng() % N;
        if (i == j) continue;
        long c = static_cast<long>(rng() % 5) - 2;
        for (std::size_t r = 0; r < N; ++r) M(r, i) += c * M(r, j);
      }
      if (N > 0 && rng() % 2) for (std::size_t r = 0; r < N; ++r) M(r, 0) = -M(r, 0);
      return M;
    };
    auto act = ActionDescriptor::integral_only(g, unimodular(a0), unimodular(a1));
    auto r = pv_step(g, act, Resolution::ElementaryDivisors);
    REQUIRE(r.group);
    std::size_t lhs = r.group->k0.rank() + r.group->k1.rank();
    std::size_t rhs = 0;
    for (int d = 0; d < 2; ++d) rhs += r.homology[d].ker.rank() + r.homology[d].coker.rank();
    CHECK(lhs == rhs);
    CHECK(r.homology[0].ker.rank() == r.homology[0].coker.rank());
  }
}

TEST_CASE("classify_A over Q matches the inductive truncations") {
  auto r = classify_A(numfield::parse_field("x"), 8);
  for (const auto& t : r.truncations)
    if (t.m >= 1) CHECK(t.group == k_of_A_truncated_Q(static_cast<unsigned>(t.m)));
}

TEST_CASE("full adele ranks double the A(Q) ranks") {
  auto full = report_full_adele_Q(6);
  auto a = classify_A(numfield::parse_field("x"), 6);
  for (std::size_t m = 0; m <= 6; ++m) {
    CHECK(full.truncations[m].k0_rank == 2 * a.truncations[m].k0_rank);
    CHECK(full.truncations[m].k1_rank == 2 * a.truncations[m].k1_rank);
  }
}
