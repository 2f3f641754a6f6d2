#pragma once

#include "rkt/core/matrix.hpp"

#include <string>
#include <vector>

namespace rkt::abgrp {

// A set of primes: either a finite list, or everything except a finite list.
struct PrimeSet {
  bool cofinite = false;
  std::vector<unsigned long> primes;  // sorted, distinct

  static PrimeSet none() { return {}; }
  static PrimeSet all() { return {true, {}}; }
  static PrimeSet all_except(std::vector<unsigned long> ps);
  static PrimeSet of(std::vector<unsigned long> ps);

  bool empty() const { return !cofinite && primes.empty(); }
  bool is_all() const { return cofinite && primes.empty(); }
  bool contains(unsigned long p) const;
  bool includes(const PrimeSet& other) const;
  PrimeSet unite(const PrimeSet& other) const;
  std::string to_string() const;  // "{2,3}", "ALL", "ALL\{2}"

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend bool operator<(const PrimeSet& a, const PrimeSet& b);
};

// Finite direct sum of Z, Z[S^-1] (Q when S is all primes), and Z/k.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  static GroupDescriptor free(std::size_t rank);
  static GroupDescriptor rationals(std::size_t rank);
  static GroupDescriptor cyclic(const Integer& k);  // k = 0 gives Z, k = 1 gives 0
  static GroupDescriptor localized(const PrimeSet& s);
  // Builds from the diagonal of a Smith form on Z^rows: zeros and missing rows give Z.
  static GroupDescriptor from_elementary_divisors(const std::vector<Integer>& d, std::size_t rows);
  // Parses strings such as "0", "Z^2+Q", "Z+(Z/2)^3", "Z[1/2]", "Loc(ALL\{2})".
  static GroupDescriptor parse(const std::string& text);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<PrimeSet>& local() const { return local_; }  // sorted, Q (ALL) last
  const std::vector<Integer>& torsion() const { return torsion_; }  // invariant factors
  std::size_t q_rank() const;                                       // number of Q summands
  std::size_t rank() const { return free_rank_ + local_.size(); }  // torsion-free rank
  bool is_zero() const { return free_rank_ == 0 && local_.empty() && torsion_.empty(); }
  bool is_free() const { return local_.empty() && torsion_.empty(); }
  bool torsion_free() const { return torsion_.empty(); }
  bool divisible() const;  // only Q summands
  bool has_local_non_q() const;
  // Number of Z/2 factors among the torsion invariants (2-rank of torsion).
  std::size_t two_rank() const;

  GroupDescriptor& operator+=(const GroupDescriptor& o);
  friend GroupDescriptor operator+(GroupDescriptor a, const GroupDescriptor& b) { return a += b; }
  GroupDescriptor power(std::size_t k) const;

  std::string to_string() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  void normalize();
  std::size_t free_rank_ = 0;
  std::vector<PrimeSet> local_;
  std::vector<Integer> torsion_;
};

// Z^rows / image(A).
GroupDescriptor cokernel(const IntMatrix& A);

}  // namespace rkt::abgrp
