#pragma once

#include "rkt/abgrp/group.hpp"
#include "rkt/core/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rkt::abgrp {

// The sequence d_1, d_2, ... of scaling parameters; level i maps to level i+1 via M(d_i).
struct Chain {
  enum class Kind { Factorial, Odd, Constant };
  Kind kind = Kind::Factorial;
  Integer value = 1;  // Constant only

  static Chain factorial() { return {Kind::Factorial, 1}; }  // d_i = i + 1
  static Chain odd() { return {Kind::Odd, 1}; }              // d_i = 2i + 1
  static Chain constant(const Integer& q) { return {Kind::Constant, q}; }

  Integer at(std::size_t level) const;  // level >= 1
  // Primes dividing infinitely many (equivalently, some) d_i.
  PrimeSet primes() const;
  std::string name() const;
};

// Square polynomial matrix M(d); column j is the image of basis vector j.
struct ScalingLaw {
  PolyMatrix matrix;
  Chain chain;
  std::size_t dim() const { return matrix.rows(); }
  int max_degree() const;
};

class DirectedSystem {
 public:
  static DirectedSystem explicit_chain(std::vector<IntMatrix> steps);
  static DirectedSystem symbolic(ScalingLaw law);

  bool is_symbolic() const { return law_.has_value(); }
  const ScalingLaw& law() const { return *law_; }
  const std::vector<IntMatrix>& steps() const { return steps_; }
  // Explicit: number of matrices T (levels 1..T+1). Symbolic: unbounded.
  std::optional<std::size_t> length() const;
  std::size_t dim_at(std::size_t level) const;
  IntMatrix step(std::size_t i) const;  // M_i : level i -> level i+1

 private:
  std::vector<IntMatrix> steps_;
  std::optional<ScalingLaw> law_;
};

// M_j * ... * M_i for 1 <= i <= j.
IntMatrix compose_window(const DirectedSystem& sys, std::size_t i, std::size_t j);
// Transition map from level a to level b >= a (identity when a == b).
IntMatrix transition(const DirectedSystem& sys, std::size_t from, std::size_t to);

}  // namespace rkt::abgrp
