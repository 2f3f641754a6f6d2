#include <doctest.h>

#include "oracles.hpp"
#include "rkt/numfield/element.hpp"
#include "rkt/numfield/real_roots.hpp"

#include <set>

using namespace rkt;
using namespace rkt::numfield;

namespace {

FieldSpecError spec_error(const std::string& s) {
  try {
    parse_field(s);
  } catch (const FieldSpecException& e) {
    return e.code();
  }
  FAIL("no error for " << s);
  return FieldSpecError::Malformed;
}

std::vector<long> small_coeffs(const ZPoly& f) {
  std::vector<long> c;
  for (const auto& z : f) c.push_back(z.get_si());
  return c;
}

FieldElement random_element(const NumberField& K, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-6, 6);
  FieldElement a;
  do {
    a.coeffs.assign(K.degree, 0);
    for (auto& c : a.coeffs) c = dist(rng);
  } while (is_zero(a));
  return a;
}

}  // namespace

TEST_CASE("polynomial parsing") {
  CHECK(parse_polynomial("x^3-2") == ZPoly{-2, 0, 0, 1});
  CHECK(parse_polynomial("2*x^2 + 3x - 1") == ZPoly{-1, 3, 2});
  CHECK(parse_polynomial("x") == ZPoly{0, 1});
  CHECK(parse_polynomial("x^1") == ZPoly{0, 1});
  CHECK(parse_polynomial("-x^2+x^2+x") == ZPoly{0, 1});
}

TEST_CASE("field spec validation") {
  CHECK(spec_error("x^^2") == FieldSpecError::Malformed);
  CHECK(spec_error("") == FieldSpecError::Malformed);
  CHECK(spec_error("3") == FieldSpecError::Malformed);
  CHECK(spec_error("2x^2+1") == FieldSpecError::NonMonic);
  CHECK(spec_error("x^2-1") == FieldSpecError::Reducible);
  CHECK(spec_error("x^4+4") == FieldSpecError::Reducible);
  CHECK(spec_error("x^3-x^2-x+1") == FieldSpecError::Reducible);
  CHECK_NOTHROW(parse_field("x^4-10x^2+1"));  // reducible modulo every prime
  CHECK(count_irreducible_factors(parse_polynomial("x^4-10x^2+1")) == 1);
  CHECK(count_irreducible_factors(parse_polynomial("x^6-1")) == 4);
}

TEST_CASE("factorization recombines to the input") {
  ZPoly f = parse_polynomial("x^8-1");
  ZPoly prod{1};
  for (const auto& [g, e] : factor_monic(f))
    for (unsigned k = 0; k < e; ++k) prod = mul(prod, g);
  CHECK(prod == f);
  CHECK(factor_monic(f).size() == 4);
}

TEST_CASE("discriminants match closed forms") {
  for (long b = -4; b <= 4; ++b)
    for (long c = -4; c <= 4; ++c) CHECK(discriminant(ZPoly{c, b, 1}) == b * b - 4 * c);
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q) CHECK(discriminant(ZPoly{q, p, 0, 1}) == -4 * p * p * p - 27 * q * q);
  CHECK(parse_field("x^2+1").discriminant_of_poly == -4);
}

TEST_CASE("Sturm real-root counts agree with Durand-Kerner on 20 polynomials") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(-9, 9);
  int tested = 0;
  while (tested < 20) {
    std::size_t n = 2 + rng() % 5;
    ZPoly f(n + 1);
    for (std::size_t i = 0; i < n; ++i) f[i] = dist(rng);
    f[n] = 1;
    Poly p = to_poly(f);
    if (f[0] == 0 || !squarefree(p)) continue;
    auto numeric = oracle::numeric_real_roots(small_coeffs(f));
    CHECK(count_real_roots(p) == numeric.size());
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == numeric.size());
    for (std::size_t i = 0; i < iso.size(); ++i) {
      CHECK(iso[i].lo.get_d() <= static_cast<double>(numeric[i]) + 1e-9);
      CHECK(iso[i].hi.get_d() >= static_cast<double>(numeric[i]) - 1e-9);
    }
    ++tested;
  }
}

TEST_CASE("signatures") {
  CHECK(signature(parse_field("x")) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(signature(parse_field("x^2+1")) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(signature(parse_field("x^3-2")) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(signature(parse_field("x^3-3x+1")) == std::pair<std::size_t, std::size_t>{3, 0});
  CHECK(signature(parse_field("x^4-10x^2+1")) == std::pair<std::size_t, std::size_t>{4, 0});
  CHECK(parse_field("x^3-2").unit_rank() == 1);
}

TEST_CASE("roots of unity") {
  CHECK(parse_field("x").roots_of_unity_order == 2);
  CHECK(parse_field("x^2+1").roots_of_unity_order == 4);
  CHECK(parse_field("x^2+x+1").roots_of_unity_order == 6);
  CHECK(parse_field("x^2+3").roots_of_unity_order == 6);
  CHECK(parse_field("x^2+2").roots_of_unity_order == 2);
  CHECK(parse_field("x^4+1").roots_of_unity_order == 8);
  CHECK(parse_field("x^4+x^3+x^2+x+1").roots_of_unity_order == 10);
  CHECK(parse_field("x^4-x^2+1").roots_of_unity_order == 12);
  CHECK(parse_field("x^4+5x^2+5").roots_of_unity_order == 10);  // generated by a difference of fifth roots of unity
  CHECK(parse_field("x^3-2").roots_of_unity_order == 2);
}

TEST_CASE("element arithmetic") {
  auto K = parse_field("x^3-2");
  auto a = parse_element(K, "1,1");
  auto inv = inverse(K, a);
  CHECK(mul(K, a, inv) == from_rational(K, 1));
  CHECK(norm(K, a) == 3);  // 1 + 2
  CHECK(norm(K, parse_element(K, "0,1")) == 2);
  CHECK_THROWS_AS(inverse(K, parse_element(K, "0")), Error);
  CHECK_THROWS_AS(parse_element(K, "1,x"), Error);
  CHECK(parse_elements(K, "1;0,1").size() == 2);
}

TEST_CASE("sign parity is multiplicative on 100 pairs") {
  std::mt19937_64 rng(5);
  std::vector<std::string> specs{"x^2-2", "x^3-2", "x^3-3x+1", "x^4-10x^2+1", "x^2-5"};
  for (int t = 0; t < 100; ++t) {
    auto K = parse_field(specs[t % specs.size()]);
    auto a = random_element(K, rng), b = random_element(K, rng);
    CHECK(sign_parity(K, mul(K, a, b)) == sign_parity(K, a) * sign_parity(K, b));
    // numeric oracle: evaluate at Durand-Kerner real roots
    auto roots = oracle::numeric_real_roots(small_coeffs(K.min_poly));
    auto signs = real_sign_vector(K, a);
    REQUIRE(signs.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      long double v = 0;
      for (std::size_t k = a.coeffs.size(); k-- > 0;) v = v * roots[i] + a.coeffs[k].get_d();
      if (std::abs(v) > 1e-9L) CHECK(signs[i] == (v > 0 ? 1 : -1));
    }
  }
  auto K = parse_field("x^2-2");
  CHECK(sign_parity(K, parse_element(K, "-1")) == 1);
  CHECK(sign_parity(K, parse_element(K, "1,1")) == -1);
  auto Q = parse_field("x");
  CHECK(sign_parity(Q, parse_element(Q, "-1")) == -1);
  auto Ki = parse_field("x^2+1");
  CHECK(sign_parity(Ki, parse_element(Ki, "-1")) == 1);
}

TEST_CASE("residue systems: cardinality and minimal representatives") {
  std::vector<std::string> specs{"x", "x^2+1", "x^3-2"};
  for (const auto& s : specs) {
    auto K = parse_field(s);
    for (unsigned long d : {2ul, 3ul, 5ul})
      for (auto style : {ResidueStyle::Standard, ResidueStyle::Centered}) {
        if (style == ResidueStyle::Centered && d % 2 == 0) {
          CHECK_THROWS_AS(residue_system(K, d, style), Error);
          continue;
        }
        auto rs = residue_system(K, d, style);
        CHECK(rs.representatives.size() == static_cast<std::size_t>(std::pow(d, K.degree)));
        std::set<std::vector<long>> classes;
        long lo = style == ResidueStyle::Standard ? 0 : -static_cast<long>(d - 1) / 2;
        long hi = style == ResidueStyle::Standard ? static_cast<long>(d) - 1 : static_cast<long>(d - 1) / 2;
        for (const auto& r : rs.representatives) {
          REQUIRE(r.size() == K.degree);
          std::vector<long> cls;
          for (long c : r) {
            CHECK(c >= lo);
            CHECK(c <= hi);
            cls.push_back(((c % static_cast<long>(d)) + static_cast<long>(d)) % static_cast<long>(d));
          }
          classes.insert(cls);
        }
        CHECK(classes.size() == rs.representatives.size());
      }
  }
  auto K = parse_field("x^2+1");
  auto rs = residue_system(K, 3, ResidueStyle::Standard);
  CHECK(rs.representatives[1] == std::vector<long>{1, 0});  // first coordinate varies fastest
}

TEST_CASE("fundamental units of real quadratic orders") {
  struct Case {
    const char* spec;
    const char* unit;
  };
  for (auto c : {Case{"x^2-2", "1,1"}, Case{"x^2-3", "2,1"}, Case{"x^2-5", "2,1"}, Case{"x^2+x-1", "1,1"},
                 Case{"x^2-7", "8,3"}}) {
    auto K = parse_field(c.spec);
    auto u = fundamental_unit_real_quadratic(K);
    CHECK(to_string(u) == c.unit);
    Rational n = norm(K, u);
    CHECK((n == 1 || n == -1));
  }
  CHECK_THROWS_AS(fundamental_unit_real_quadratic(parse_field("x^2+1")), Error);
}
