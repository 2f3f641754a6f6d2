#pragma once

#include "rkt/abgrp/colimit.hpp"
#include "rkt/ktheory/classify.hpp"
#include "rkt/ktheory/pv.hpp"

#include <json.hpp>

#include <string>

namespace rkt::cli {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& z);  // number when it fits in 64 bits, else string
Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const abgrp::GroupDescriptor& g);
Json to_json(const ktheory::GradedKGroup& g);
Json to_json(const abgrp::ColimitReport& r);
Json to_json(const ktheory::PVResult& r);
Json to_json(const ktheory::ClassificationReport& r);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

// {"mode":"explicit","dim":k,"matrices":[...]} or
// {"mode":"symbolic","dim":k,"law":[...],"offdiag":[...],"chain":{...}}.
abgrp::DirectedSystem system_from_json(const Json& j);

// {"k0":"Z + Q","k1":"0","action":{"0":{"integral":..,"rational":..,"mixing":..},"1":{..}}}
struct PVInput {
  ktheory::GradedKGroup group;
  ktheory::ActionDescriptor action;
};
PVInput pv_input_from_json(const Json& j);

Json read_json_file(const std::string& path);

// Human-readable rendering used by --pretty.
std::string pretty(const Json& j);

}  // namespace rkt::cli
