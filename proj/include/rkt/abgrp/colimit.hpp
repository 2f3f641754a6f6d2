#pragma once

#include "rkt/abgrp/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rkt::abgrp {

// (level_a, a) and (level_b, b) have the same image in the colimit.
struct Relation {
  std::size_t level_a;
  IntVector a;
  std::size_t level_b;
  IntVector b;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct ColimitReport {
  GroupDescriptor invariants;
  std::vector<Relation> relations;
  bool truncated = false;

  // Diagnostics; not part of report equality.
  std::size_t eventual_rank = 0;
  std::size_t reduction_depth = 0;   // symbolic: steps until the image is stable
  IntMatrix stable_basis;            // columns, original coordinates
  std::vector<std::string> directions;  // per stable direction: diagonal law and type
  std::vector<std::string> notes;

  friend bool operator==(const ColimitReport& x, const ColimitReport& y) {
    return x.invariants == y.invariants && x.relations == y.relations && x.truncated == y.truncated;
  }
};

ColimitReport colimit(const DirectedSystem& sys);

struct IdentifyResult {
  bool identified = false;
  bool exact = false;            // symbolic mode: the answer is final
  std::size_t decided_at = 0;    // level where images were compared last / agreed
};

// Explicit mode searches levels up to `horizon` (default: chain end).
IdentifyResult identified(const DirectedSystem& sys, std::size_t level_i, const IntVector& v, std::size_t level_j,
                          const IntVector& w, std::optional<std::size_t> horizon = std::nullopt);

}  // namespace rkt::abgrp
