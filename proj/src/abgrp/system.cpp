#include "rkt/abgrp/system.hpp"

namespace rkt::abgrp {

Integer Chain::at(std::size_t level) const {
  require(level >= 1, ErrorKind::Input, "levels start at 1");
  switch (kind) {
    case Kind::Factorial: return Integer(static_cast<unsigned long>(level + 1));
    case Kind::Odd: return Integer(static_cast<unsigned long>(2 * level + 1));
    case Kind::Constant: return value;
  }
  return value;
}

PrimeSet Chain::primes() const {
  switch (kind) {
    case Kind::Factorial: return PrimeSet::all();
    case Kind::Odd: return PrimeSet::all_except({2});
    case Kind::Constant: return value == 0 ? PrimeSet::all() : PrimeSet::of(prime_divisors(value));
  }
  return PrimeSet::none();
}

std::string Chain::name() const {
  switch (kind) {
    case Kind::Factorial: return "factorial";
    case Kind::Odd: return "odd";
    case Kind::Constant: return "constant:" + value.get_str();
  }
  return "";
}

int ScalingLaw::max_degree() const {
  int m = 0;
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) m = std::max(m, matrix(i, j).degree());
  return m;
}

// Value of p along the chain as a polynomial in the level index.
static Poly along_chain(const Poly& p, const Chain& c) {
  Poly d;
  switch (c.kind) {
    case Chain::Kind::Factorial: d = Poly(std::vector<Rational>{1, 1}); break;
    case Chain::Kind::Odd: d = Poly(std::vector<Rational>{1, 2}); break;
    case Chain::Kind::Constant: return Poly(p(Rational(c.value)));
  }
  Poly out;
  for (int k = p.degree(); k >= 0; --k) out = out * d + Poly(p.coeff(k));
  return out;
}

DirectedSystem DirectedSystem::explicit_chain(std::vector<IntMatrix> steps) {
  require(!steps.empty(), ErrorKind::Input, "explicit chain needs at least one matrix");
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    require(steps[i + 1].cols() == steps[i].rows(), ErrorKind::Input,
            "chain not composable at step " + std::to_string(i + 2) + ": expects " +
                std::to_string(steps[i + 1].cols()) + " inputs, previous step has " +
                std::to_string(steps[i].rows()) + " outputs");
  DirectedSystem s;
  s.steps_ = std::move(steps);
  return s;
}

DirectedSystem DirectedSystem::symbolic(ScalingLaw law) {
  require(law.matrix.square() && law.matrix.rows() > 0, ErrorKind::Input, "scaling law must be a nonempty square matrix");
  require(law.chain.kind != Chain::Kind::Constant || law.chain.value >= 1, ErrorKind::Input,
          "constant chain value must be positive");
  for (std::size_t i = 0; i < law.dim(); ++i)
    for (std::size_t j = 0; j < law.dim(); ++j)
      require(along_chain(law.matrix(i, j), law.chain).integer_valued(), ErrorKind::Input,
              "law entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + law.matrix(i, j).to_string("d") +
                  " is not integral along the " + law.chain.name() + " chain");
  DirectedSystem s;
  s.law_ = std::move(law);
  return s;
}

std::optional<std::size_t> DirectedSystem::length() const {
  if (law_) return std::nullopt;
  return steps_.size();
}

std::size_t DirectedSystem::dim_at(std::size_t level) const {
  if (law_) return law_->dim();
  require(level >= 1 && level <= steps_.size() + 1, ErrorKind::Input, "level out of range: " + std::to_string(level));
  return level <= steps_.size() ? steps_[level - 1].cols() : steps_.back().rows();
}

IntMatrix DirectedSystem::step(std::size_t i) const {
  if (law_) {
    require(i >= 1, ErrorKind::Input, "step index must be >= 1");
    return evaluate_integral(law_->matrix, law_->chain.at(i));
  }
  require(i >= 1 && i <= steps_.size(), ErrorKind::Input,
          "step index " + std::to_string(i) + " outside 1.." + std::to_string(steps_.size()));
  return steps_[i - 1];
}

IntMatrix compose_window(const DirectedSystem& sys, std::size_t i, std::size_t j) {
  require(i >= 1 && i <= j, ErrorKind::Input, "window requires 1 <= i <= j");
  IntMatrix P = sys.step(i);
  for (std::size_t t = i + 1; t <= j; ++t) P = sys.step(t) * P;
  return P;
}

IntMatrix transition(const DirectedSystem& sys, std::size_t from, std::size_t to) {
  require(from <= to, ErrorKind::Input, "transition goes forward only");
  if (from == to) return IntMatrix::identity(sys.dim_at(from));
  return compose_window(sys, from, to - 1);
}

}  // namespace rkt::abgrp
