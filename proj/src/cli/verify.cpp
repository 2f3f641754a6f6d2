#include "rkt/cli/verify.hpp"

#include "rkt/abgrp/colimit.hpp"
#include "rkt/ktheory/classify.hpp"
#include "rkt/ktheory/closed_forms.hpp"
#include "rkt/ktheory/kappa.hpp"

#include <functional>

namespace rkt::cli {

using abgrp::DirectedSystem;
using abgrp::GroupDescriptor;
using ktheory::GradedKGroup;

bool SuiteResult::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

Json SuiteResult::to_json() const {
  Json j;
  j["suite"] = suite;
  j["passed"] = passed();
  Json list = Json::array();
  for (const auto& a : assertions)
    list.push_back(Json{{"name", a.name}, {"citation", a.citation}, {"passed", a.passed}, {"detail", a.detail}});
  j["assertions"] = list;
  j["citations"] = Json::array();
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"q-case", "kappa", "colim", "classify"};
  return names;
}

namespace {

struct Battery {
  SuiteResult result;
  // The check returns an empty string on success, else a failure description.
  void add(const std::string& name, const std::string& citation, const std::function<std::string()>& check) {
    Assertion a{name, citation, false, ""};
    try {
      a.detail = check();
      a.passed = a.detail.empty();
      if (a.passed) a.detail = "ok";
    } catch (const Error& e) {
      a.detail = std::string(kind_name(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      a.detail = std::string("exception: ") + e.what();
    }
    result.assertions.push_back(std::move(a));
  }
};

std::string expect_matrix(const IntMatrix& got, const IntMatrix& want) {
  if (got == want) return "";
  return "got " + to_string(got) + ", expected " + to_string(want);
}

std::string expect_group(const GroupDescriptor& got, const std::string& want) {
  GroupDescriptor w = GroupDescriptor::parse(want);
  if (got == w) return "";
  return "got " + got.to_string() + ", expected " + w.to_string();
}

std::string expect_graded(const GradedKGroup& got, const GradedKGroup& want) {
  if (got == want) return "";
  return "got " + got.to_string() + ", expected " + want.to_string();
}

const char* kRationalMatrices = "structure matrices of the rational-case filtration inclusions";
const char* kRationalLimit = "K_0 of the rational-case inductive limit is Q + Z";
const char* kRationalRelation = "the relation between the unit class and twice q in the rational case";
const char* kRationalTheorem = "K_*(A) over Q truncated to m generators of Q_+ has ranks 2^(m-1)";

void rational_matrices(Battery& b) {
  b.add("kappa(1,2) in the rational ordering", kRationalMatrices, [] {
    return expect_matrix(ktheory::kappa_rational_case_order(ktheory::kappa(1, 2)),
                         IntMatrix::from_rows({{2, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
  });
  for (long d : {3, 5, 7, 15})
    b.add("kappa(1," + std::to_string(d) + ") in the rational ordering", kRationalMatrices, [d] {
      Integer h = (d - 1) / 2;
      return expect_matrix(ktheory::kappa_rational_case_order(ktheory::kappa(1, d)),
                           IntMatrix::from_rows({{Integer(d), h, h}, {0, 1, 0}, {0, 0, 1}}));
    });
}

void rational_colimit(Battery& b, std::size_t horizon) {
  b.add("rational-case colimit is Q + Z", kRationalLimit, [] {
    return expect_group(abgrp::colimit(DirectedSystem::symbolic(ktheory::rational_case_law())).invariants, "Q + Z");
  });
  b.add("unit class identified with 2q", kRationalRelation, [horizon] {
    auto sys = DirectedSystem::symbolic(ktheory::rational_case_law());
    auto r = abgrp::identified(sys, 1, IntVector{1, 0, 0}, 1, IntVector{0, 2, 0}, horizon);
    return r.identified ? std::string() : "not identified (decided at level " + std::to_string(r.decided_at) + ")";
  });
  b.add("unit class not identified with q", kRationalRelation, [horizon] {
    auto sys = DirectedSystem::symbolic(ktheory::rational_case_law());
    auto r = abgrp::identified(sys, 1, IntVector{1, 0, 0}, 1, IntVector{0, 1, 0}, horizon);
    return r.identified ? std::string("unexpectedly identified") : std::string();
  });
}

Battery q_case(std::size_t horizon) {
  Battery b;
  rational_matrices(b);
  rational_colimit(b, horizon);
  for (unsigned m = 1; m <= 8; ++m)
    b.add("truncated rational K-theory, m = " + std::to_string(m), kRationalTheorem, [m] {
      auto f = GroupDescriptor::free(std::size_t(1) << (m - 1));
      return expect_graded(ktheory::k_of_A_truncated_Q(m), {f, f});
    });
  return b;
}

Battery kappa_suite() {
  Battery b;
  for (unsigned n = 1; n <= 5; ++n)
    b.add("kappa_2 kappa_d = kappa_2d, n = " + std::to_string(n) + ", odd d <= 99",
          "kappa_2d is the composite of kappa_2 and kappa_d", [n] {
            auto k2 = ktheory::kappa(n, 2).matrix;
            for (long d = 3; d <= 99; d += 2) {
              auto lhs = k2 * ktheory::kappa(n, d).matrix;
              auto rhs = ktheory::kappa(n, 2 * d).matrix;
              if (!(lhs == rhs)) return "mismatch at d = " + std::to_string(d);
            }
            return std::string();
          });
  for (unsigned n = 1; n <= 5; ++n)
    b.add("kappa_d kappa_e = kappa_de for odd d, e <= 15, n = " + std::to_string(n),
          "functoriality of the filtration inclusions", [n] {
            for (long d = 3; d <= 15; d += 2)
              for (long e = 3; e <= 15; e += 2)
                if (!(ktheory::kappa(n, d).matrix * ktheory::kappa(n, e).matrix == ktheory::kappa(n, d * e).matrix))
                  return "mismatch at d = " + std::to_string(d) + ", e = " + std::to_string(e);
            return std::string();
          });
  return b;
}

Battery colim_suite(std::size_t horizon) {
  Battery b;
  rational_colimit(b, horizon);
  b.add("colim(Z, x d_i) over the factorial chain is Q", "directed colimit of multiplication maps", [] {
    PolyMatrix M(1, 1);
    M(0, 0) = Poly::x();
    return expect_group(abgrp::colimit(DirectedSystem::symbolic({M, abgrp::Chain::factorial()})).invariants, "Q");
  });
  b.add("colim(Z, x 2) is Z[1/2]", "directed colimit of multiplication maps", [] {
    PolyMatrix M(1, 1);
    M(0, 0) = Poly(2);
    return expect_group(abgrp::colimit(DirectedSystem::symbolic({M, abgrp::Chain::factorial()})).invariants, "Z[1/2]");
  });
  for (unsigned n = 1; n <= 3; ++n) {
    b.add("K_*(B^0) closed form vs engine, n = " + std::to_string(n),
          "K_*(B^0) is Q^(2^(n-1)) in both degrees for odd n, with a Z in K_0 for even n", [n] {
            ktheory::k_of_B0(n);
            return std::string();
          });
    b.add("K_*(A^0) closed form vs engine, n = " + std::to_string(n),
          "K_0(A^0) is Z + Q^(2^(n-1)) for odd n and Z + Q^(2^(n-1)-1) + Z for even n, K_1 = 0", [n] {
            ktheory::k_of_A0(n);
            return std::string();
          });
  }
  return b;
}

std::string expect_report(const ktheory::ClassificationReport& r, const std::string& case_id, const std::string& k0,
                          const std::string& k1) {
  std::string err;
  if (r.case_id != case_id) err += "case " + r.case_id + " (expected " + case_id + "); ";
  if (r.limit_k0 != k0) err += "K_0 " + r.limit_k0 + " (expected " + k0 + "); ";
  if (r.limit_k1 != k1) err += "K_1 " + r.limit_k1 + " (expected " + k1 + "); ";
  return err;
}

std::string expect_ranks(const ktheory::ClassificationReport& r, std::size_t mult, bool swap, std::size_t from = 0) {
  for (const auto& t : r.truncations) {
    std::size_t m = t.m;
    if (m < from) continue;
    std::size_t e0 = ktheory::exterior_graded_ranks(m, 0).get_ui(), e1 = ktheory::exterior_graded_ranks(m, 1).get_ui();
    if (swap) std::swap(e0, e1);
    if (t.k0_rank != mult * e0 || t.k1_rank != mult * e1)
      return "truncation m = " + std::to_string(m) + " has ranks (" + std::to_string(t.k0_rank) + ", " +
             std::to_string(t.k1_rank) + ")";
  }
  return "";
}

Battery classify_suite() {
  Battery b;
  const char* cB = "four-case classification of K_*(B)";
  const char* cA = "three-case classification of K_*(A)";
  b.add("Q: B is Lambda(Gamma)", cB, [] {
    auto K = numfield::parse_field("x");
    auto r = ktheory::classify_B(K, {numfield::parse_element(K, "2")}, 4);
    std::string err = expect_report(r, "B2_odd_real_all_even_generators", "Lambda^odd(Gamma)", "Lambda^even(Gamma)");
    return err + expect_ranks(r, 1, true);
  });
  b.add("Q: A is Lambda(Gamma) with ranks (8, 8) at m = 4", cA, [] {
    auto r = ktheory::classify_A(numfield::parse_field("x"), 4);
    std::string err = expect_report(r, "A_b_odd_real_places", "Lambda^even(Gamma)", "Lambda^odd(Gamma)");
    if (r.truncations.back().k0_rank != 8 || r.truncations.back().k1_rank != 8) err += "ranks at m = 4 are not (8, 8)";
    return err + expect_ranks(r, 1, false);
  });
  b.add("Q(i): B is Lambda(Gamma)", cB, [] {
    auto r = ktheory::classify_B(numfield::parse_field("x^2+1"), {}, 3);
    return expect_report(r, "B1_no_real_places", "Lambda^even(Gamma)", "Lambda^odd(Gamma)") + expect_ranks(r, 1, false);
  });
  b.add("Q(i): A rejected, roots of unity of order 4", "A classification requires roots of unity {+1,-1}", [] {
    try {
      ktheory::classify_A(numfield::parse_field("x^2+1"), 3);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Hypothesis ? std::string() : std::string("wrong error kind ") + kind_name(e.kind());
    }
    return std::string("no error raised");
  });
  b.add("Q(sqrt 2), generator 1+sqrt 2: B is (Z/2) (x) Lambda(Gamma)", cB, [] {
    auto K = numfield::parse_field("x^2-2");
    auto r = ktheory::classify_B(K, {numfield::parse_element(K, "1,1")}, 3);
    std::string err = expect_report(r, "B4_even_real_places", "(Z/2) (x) Lambda^even(Gamma)", "(Z/2) (x) Lambda^odd(Gamma)");
    for (const auto& t : r.truncations)
      if (t.m >= 1 && (t.k0_rank != 0 || t.k0_torsion != ktheory::exterior_graded_ranks(t.m - 1, 0)))
        err += "bad truncation at m = " + std::to_string(t.m) + "; ";
    return err;
  });
  b.add("Q(sqrt 2), generator 1+sqrt 2: A is Lambda(Gamma) + (Z/2) (x) Lambda(Gamma)", cA, [] {
    auto K = numfield::parse_field("x^2-2");
    auto r = ktheory::classify_A(K, 3, {numfield::parse_element(K, "1,1")});
    return expect_report(r, "A_c_even_real_places", "Lambda^even(Gamma) + (Z/2) (x) Lambda^even(Gamma)",
                         "Lambda^odd(Gamma) + (Z/2) (x) Lambda^odd(Gamma)") +
           expect_ranks(r, 1, false, 1);
  });
  b.add("Q(cbrt 2): A is Lambda(Gamma)", cA, [] {
    auto r = ktheory::classify_A(numfield::parse_field("x^3-2"), 4);
    return expect_report(r, "A_b_odd_real_places", "Lambda^even(Gamma)", "Lambda^odd(Gamma)") + expect_ranks(r, 1, false);
  });
  return b;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::size_t identify_horizon) {
  Battery b;
  if (name == "q-case")
    b = q_case(identify_horizon);
  else if (name == "kappa")
    b = kappa_suite();
  else if (name == "colim")
    b = colim_suite(identify_horizon);
  else if (name == "classify")
    b = classify_suite();
  else
    fail(ErrorKind::Input, "unknown suite '" + name + "' (expected q-case, kappa, colim or classify)");
  b.result.suite = name;
  return b.result;
}

}  // namespace rkt::cli
