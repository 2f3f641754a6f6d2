#include "rkt/core/integer.hpp"

#include "rkt/core/error.hpp"

#include <cctype>

namespace rkt {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::CrossCheck: return "cross-check";
    case ErrorKind::Ambiguous: return "ambiguous-extension";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

static std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
  if (digits.empty()) fail(ErrorKind::Input, "expected an integer, got '" + std::string(text) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorKind::Input, "expected an integer, got '" + std::string(text) + "'");
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  return Integer(buf, 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Input, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<unsigned long> prime_divisors(const Integer& n) {
  require(n != 0, ErrorKind::Internal, "prime_divisors of zero");
  Integer m = abs(n);
  std::vector<unsigned long> out;
  for (unsigned long p = 2; Integer(p) * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
    if (p > 10000000UL) fail(ErrorKind::Unsupported, "integer too large to factor by trial division");
  }
  if (m > 1) {
    require(m.fits_ulong_p(), ErrorKind::Unsupported, "prime factor exceeds machine word");
    out.push_back(m.get_ui());
  }
  return out;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  unsigned long x = m;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

Integer isqrt(const Integer& n) {
  require(n >= 0, ErrorKind::Internal, "isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace rkt
