#pragma once

#include "rkt/abgrp/group.hpp"

#include <string>

namespace rkt::ktheory {

using abgrp::GroupDescriptor;

// Which exterior parity is placed in K_0.
enum class Grading { Even, Odd };
const char* grading_name(Grading g);
Grading parse_grading(const std::string& s);

struct GradedKGroup {
  GroupDescriptor k0;
  GroupDescriptor k1;
  Grading grading_offset = Grading::Even;

  const GroupDescriptor& operator[](int j) const { return j % 2 == 0 ? k0 : k1; }
  GradedKGroup shifted() const;  // swap K_0 and K_1, flip the offset
  std::string to_string() const;
  friend bool operator==(const GradedKGroup& a, const GradedKGroup& b) { return a.k0 == b.k0 && a.k1 == b.k1; }
};

// sum over k ≡ parity (mod 2) of binom(r, k).
Integer exterior_graded_ranks(unsigned long r, int parity);

}  // namespace rkt::ktheory
