#include "rkt/abgrp/group.hpp"

#include "rkt/abgrp/snf.hpp"

#include <algorithm>
#include <cctype>

namespace rkt::abgrp {

static std::vector<unsigned long> sorted_unique(std::vector<unsigned long> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (auto p : ps) require(is_prime(p), ErrorKind::Input, "not a prime: " + std::to_string(p));
  return ps;
}

PrimeSet PrimeSet::all_except(std::vector<unsigned long> ps) { return {true, sorted_unique(std::move(ps))}; }

PrimeSet PrimeSet::of(std::vector<unsigned long> ps) { return {false, sorted_unique(std::move(ps))}; }

bool PrimeSet::contains(unsigned long p) const {
  bool listed = std::binary_search(primes.begin(), primes.end(), p);
  return cofinite ? !listed : listed;
}

bool PrimeSet::includes(const PrimeSet& o) const {
  if (!cofinite) {
    if (o.cofinite) return false;
    return std::includes(primes.begin(), primes.end(), o.primes.begin(), o.primes.end());
  }
  if (o.cofinite)  // complement of o contains complement of this
    return std::includes(o.primes.begin(), o.primes.end(), primes.begin(), primes.end());
  for (auto p : o.primes)
    if (!contains(p)) return false;
  return true;
}

PrimeSet PrimeSet::unite(const PrimeSet& o) const {
  PrimeSet r;
  if (!cofinite && !o.cofinite) {
    r.primes = primes;
    r.primes.insert(r.primes.end(), o.primes.begin(), o.primes.end());
    r.primes = sorted_unique(r.primes);
    return r;
  }
  r.cofinite = true;
  if (cofinite && o.cofinite) {
    std::set_intersection(primes.begin(), primes.end(), o.primes.begin(), o.primes.end(),
                          std::back_inserter(r.primes));
    return r;
  }
  const PrimeSet& co = cofinite ? *this : o;
  const PrimeSet& fin = cofinite ? o : *this;
  std::set_difference(co.primes.begin(), co.primes.end(), fin.primes.begin(), fin.primes.end(),
                      std::back_inserter(r.primes));
  return r;
}

std::string PrimeSet::to_string() const {
  std::string list;
  for (std::size_t i = 0; i < primes.size(); ++i) list += (i ? "," : "") + std::to_string(primes[i]);
  if (!cofinite) return "{" + list + "}";
  if (primes.empty()) return "ALL";
  return "ALL\\{" + list + "}";
}

bool operator<(const PrimeSet& a, const PrimeSet& b) {
  if (a.cofinite != b.cofinite) return !a.cofinite;
  if (a.primes.size() != b.primes.size())
    return a.cofinite ? a.primes.size() > b.primes.size() : a.primes.size() < b.primes.size();
  return a.primes < b.primes;
}

GroupDescriptor GroupDescriptor::free(std::size_t rank) {
  GroupDescriptor g;
  g.free_rank_ = rank;
  return g;
}

GroupDescriptor GroupDescriptor::rationals(std::size_t rank) {
  GroupDescriptor g;
  g.local_.assign(rank, PrimeSet::all());
  return g;
}

GroupDescriptor GroupDescriptor::cyclic(const Integer& k) {
  GroupDescriptor g;
  Integer a = abs(k);
  if (a == 0)
    g.free_rank_ = 1;
  else if (a > 1)
    g.torsion_.push_back(a);
  return g;
}

GroupDescriptor GroupDescriptor::localized(const PrimeSet& s) {
  GroupDescriptor g;
  g.local_.push_back(s);
  g.normalize();
  return g;
}

GroupDescriptor GroupDescriptor::from_elementary_divisors(const std::vector<Integer>& d, std::size_t rows) {
  GroupDescriptor g;
  for (const auto& x : d) g += cyclic(x);
  if (rows > d.size()) g.free_rank_ += rows - d.size();
  return g;
}

std::size_t GroupDescriptor::q_rank() const {
  return static_cast<std::size_t>(std::count_if(local_.begin(), local_.end(), [](const PrimeSet& s) { return s.is_all(); }));
}

bool GroupDescriptor::divisible() const { return free_rank_ == 0 && torsion_.empty() && q_rank() == local_.size(); }

bool GroupDescriptor::has_local_non_q() const { return q_rank() != local_.size(); }

std::size_t GroupDescriptor::two_rank() const {
  return static_cast<std::size_t>(std::count_if(torsion_.begin(), torsion_.end(), [](const Integer& k) { return k % 2 == 0; }));
}

GroupDescriptor& GroupDescriptor::operator+=(const GroupDescriptor& o) {
  free_rank_ += o.free_rank_;
  local_.insert(local_.end(), o.local_.begin(), o.local_.end());
  torsion_.insert(torsion_.end(), o.torsion_.begin(), o.torsion_.end());
  normalize();
  return *this;
}

GroupDescriptor GroupDescriptor::power(std::size_t k) const {
  GroupDescriptor g;
  for (std::size_t i = 0; i < k; ++i) g += *this;
  return g;
}

void GroupDescriptor::normalize() {
  std::vector<PrimeSet> kept;
  for (auto& s : local_) {
    if (s.empty())
      ++free_rank_;
    else
      kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  local_ = std::move(kept);
  if (torsion_.size() > 1) {
    IntMatrix D(torsion_.size(), torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i) D(i, i) = torsion_[i];
    std::vector<Integer> inv;
    for (auto& x : elementary_divisors(D))
      if (x != 1) inv.push_back(x);
    torsion_ = std::move(inv);
  }
}

static std::string with_power(const std::string& base, std::size_t k, bool paren) {
  if (k == 1) return base;
  return (paren ? "(" + base + ")" : base) + "^" + std::to_string(k);
}

std::string GroupDescriptor::to_string() const {
  std::vector<std::string> parts;
  if (free_rank_) parts.push_back(with_power("Z", free_rank_, false));
  for (std::size_t i = 0; i < local_.size();) {
    std::size_t j = i;
    while (j < local_.size() && local_[j] == local_[i]) ++j;
    const PrimeSet& s = local_[i];
    std::string name;
    if (s.is_all())
      name = "Q";
    else if (!s.cofinite) {
      name = "Z[";
      for (std::size_t t = 0; t < s.primes.size(); ++t) name += (t ? ",1/" : "1/") + std::to_string(s.primes[t]);
      name += "]";
    } else
      name = "Loc(" + s.to_string() + ")";
    parts.push_back(with_power(name, j - i, name != "Q"));
    i = j;
  }
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string name = "Z/" + torsion_[i].get_str();
    parts.push_back(with_power(name, j - i, j - i > 1));
    i = j;
  }
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  unsigned long number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) bad();
    return std::stoul(s.substr(start, i - start));
  }
  Integer big() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) bad();
    return Integer(s.substr(start, i - start));
  }
  [[noreturn]] void bad() { fail(ErrorKind::Input, "cannot parse group descriptor '" + s + "' near position " + std::to_string(i)); }
};

GroupDescriptor parse_atom(Cursor& c) {
  if (c.eat("0")) return {};
  if (c.eat("(")) {
    GroupDescriptor g = parse_atom(c);
    if (!c.eat(")")) c.bad();
    return g;
  }
  if (c.eat("Q")) return GroupDescriptor::rationals(1);
  if (c.eat("Loc(")) {
    PrimeSet s;
    if (c.eat("ALL")) {
      s.cofinite = true;
      if (c.eat("\\{")) {
        std::vector<unsigned long> ps;
        do ps.push_back(c.number());
        while (c.eat(","));
        if (!c.eat("}")) c.bad();
        s = PrimeSet::all_except(ps);
      }
    } else if (c.eat("{")) {
      std::vector<unsigned long> ps;
      if (!c.eat("}")) {
        do ps.push_back(c.number());
        while (c.eat(","));
        if (!c.eat("}")) c.bad();
      }
      s = PrimeSet::of(ps);
    } else
      c.bad();
    if (!c.eat(")")) c.bad();
    return GroupDescriptor::localized(s);
  }
  if (c.eat("Z")) {
    if (c.eat("/")) return GroupDescriptor::cyclic(c.big());
    if (c.eat("[")) {
      std::vector<unsigned long> ps;
      do {
        if (!c.eat("1/")) c.bad();
        ps.push_back(c.number());
      } while (c.eat(","));
      if (!c.eat("]")) c.bad();
      return GroupDescriptor::localized(PrimeSet::of(ps));
    }
    return GroupDescriptor::free(1);
  }
  c.bad();
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  Cursor c{text};
  GroupDescriptor g;
  do {
    GroupDescriptor atom = parse_atom(c);
    if (c.eat("^")) atom = atom.power(c.number());
    g += atom;
  } while (c.eat("+") || c.eat("⊕"));
  if (!c.done()) c.bad();
  return g;
}

GroupDescriptor cokernel(const IntMatrix& A) {
  return GroupDescriptor::from_elementary_divisors(elementary_divisors(A), A.rows());
}

}  // namespace rkt::abgrp
