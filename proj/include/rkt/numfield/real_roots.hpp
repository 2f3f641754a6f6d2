#pragma once

#include "rkt/numfield/field.hpp"

#include <vector>

namespace rkt::numfield {

// Sturm sequence f, f', -rem(...), ... over Q.
std::vector<Poly> sturm_sequence(const Poly& f);
std::size_t sign_changes_at(const std::vector<Poly>& seq, const Rational& t);
std::size_t sign_changes_at_infinity(const std::vector<Poly>& seq, bool positive);
// Number of distinct real roots of a squarefree f.
std::size_t count_real_roots(const Poly& f);
// Isolating intervals of the real roots of a squarefree f, ascending.
std::vector<RealRoot> isolate_real_roots(const Poly& f);

// Sign of g at the root of f isolated by `root`, certified by interval
// refinement. Throws Input if g vanishes there.
int sign_at_root(const Poly& f, RealRoot root, const Poly& g);

}  // namespace rkt::numfield
