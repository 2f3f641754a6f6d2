#pragma once

#include "rkt/ktheory/graded.hpp"
#include "rkt/numfield/element.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rkt::ktheory {

struct Truncation {
  std::size_t m = 0;
  GradedKGroup group;
  std::size_t k0_rank = 0;
  std::size_t k1_rank = 0;
  std::size_t k0_torsion = 0;  // number of Z/2 summands
  std::size_t k1_torsion = 0;
};

struct ClassificationReport {
  std::string algebra;
  std::string case_id;
  bool insufficient_data = false;
  std::string limit_k0;  // symbolic label of the infinite-rank answer
  std::string limit_k1;
  std::optional<GradedKGroup> exact;  // finite answers (A0, B0)
  std::vector<Truncation> truncations;
  Grading grading_offset = Grading::Even;
  std::vector<int> generator_parities;
  std::vector<std::string> notes;
  std::vector<std::string> citations;
};

// Default offset: odd for the rational field in the B case, even otherwise.
Grading default_grading_B(const numfield::NumberField& K);

ClassificationReport classify_B(const numfield::NumberField& K, const std::vector<numfield::FieldElement>& gamma,
                                std::size_t truncate, std::optional<Grading> grading = std::nullopt);
ClassificationReport classify_A(const numfield::NumberField& K, std::size_t truncate,
                                const std::vector<numfield::FieldElement>& gamma = {},
                                std::optional<Grading> grading = std::nullopt);
ClassificationReport report_full_adele_Q(std::size_t truncate, Grading grading = Grading::Even);
ClassificationReport report_A0(unsigned n);
ClassificationReport report_B0(unsigned n);

}  // namespace rkt::ktheory
