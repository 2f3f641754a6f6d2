#include "rkt/cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rkt::cli {

using abgrp::GroupDescriptor;

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

Json to_json(const GroupDescriptor& g) {
  Json j;
  j["text"] = g.to_string();
  j["free_rank"] = g.free_rank();
  Json local = Json::array();
  for (const auto& s : g.local()) local.push_back(s.is_all() ? "Q" : "Loc(" + s.to_string() + ")");
  j["localized"] = local;
  Json tors = Json::array();
  for (const auto& t : g.torsion()) tors.push_back(integer_json(t));
  j["torsion"] = tors;
  return j;
}

Json to_json(const ktheory::GradedKGroup& g) {
  Json j;
  j["k0"] = to_json(g.k0);
  j["k1"] = to_json(g.k1);
  j["grading_offset"] = ktheory::grading_name(g.grading_offset);
  return j;
}

Json to_json(const abgrp::ColimitReport& r) {
  Json j;
  j["invariants"] = to_json(r.invariants);
  Json rel = Json::array();
  for (const auto& x : r.relations)
    rel.push_back(Json{{"left", {{"level", x.level_a}, {"vector", to_json(x.a)}}},
                       {"right", {{"level", x.level_b}, {"vector", to_json(x.b)}}}});
  j["relations"] = rel;
  j["truncated"] = r.truncated;
  j["eventual_rank"] = r.eventual_rank;
  j["reduction_depth"] = r.reduction_depth;
  j["stable_basis"] = to_json(r.stable_basis.transpose());
  j["directions"] = r.directions;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ktheory::PVResult& r) {
  Json j;
  Json h = Json::array();
  for (int d = 0; d < 2; ++d)
    h.push_back(Json{{"degree", d}, {"ker", to_json(r.homology[d].ker)}, {"coker", to_json(r.homology[d].coker)}});
  j["homology"] = h;
  j["forced_split"] = r.forced_split;
  j["resolved"] = r.resolved;
  if (r.group) {
    j["k0"] = to_json(r.group->k0);
    j["k1"] = to_json(r.group->k1);
  } else {
    j["k0"] = nullptr;
    j["k1"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

Json to_json(const ktheory::ClassificationReport& r) {
  Json j;
  j["algebra"] = r.algebra;
  j["case"] = r.case_id;
  if (r.insufficient_data) {
    j["k0"] = nullptr;
    j["k1"] = nullptr;
  } else {
    j["k0"] = r.limit_k0;
    j["k1"] = r.limit_k1;
  }
  Json tr = Json::array();
  for (const auto& t : r.truncations)
    tr.push_back(Json{{"m", t.m},
                      {"k0_rank", t.k0_rank},
                      {"k1_rank", t.k1_rank},
                      {"torsion", {{"k0", t.k0_torsion}, {"k1", t.k1_torsion}}},
                      {"k0_group", t.group.k0.to_string()},
                      {"k1_group", t.group.k1.to_string()}});
  j["truncations"] = tr;
  j["grading_offset"] = ktheory::grading_name(r.grading_offset);
  if (!r.generator_parities.empty()) j["generator_parities"] = r.generator_parities;
  j["notes"] = r.notes;
  j["citations"] = r.citations;
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail(ErrorKind::Input, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from_json(j));
}

IntMatrix int_matrix_from_json(const Json& j) {
  require(j.is_array(), ErrorKind::Input, "matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    require(row.is_array(), ErrorKind::Input, "matrix row must be an array");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(r);
  }
  return IntMatrix::from_rows(rows);
}

RatMatrix rat_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  require(j.is_array() && j.size() == rows, ErrorKind::Input, "rational block must have " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, ErrorKind::Input,
            "rational block rows must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

static std::size_t index_field(const Json& j, const char* key, std::size_t bound) {
  require(j.contains(key) && j[key].is_number_integer(), ErrorKind::Input, std::string("missing integer field '") + key + "'");
  long v = j[key].get<long>();
  require(v >= 0 && static_cast<std::size_t>(v) < bound, ErrorKind::Input, std::string("field '") + key + "' out of range");
  return static_cast<std::size_t>(v);
}

abgrp::DirectedSystem system_from_json(const Json& j) {
  require(j.is_object() && j.contains("mode"), ErrorKind::Input, "system JSON needs a 'mode' field");
  std::string mode = j["mode"].get<std::string>();
  if (mode == "explicit") {
    require(j.contains("matrices") && j["matrices"].is_array(), ErrorKind::Input, "explicit system needs 'matrices'");
    std::vector<IntMatrix> steps;
    for (const auto& m : j["matrices"]) steps.push_back(int_matrix_from_json(m));
    if (j.contains("dim") && !steps.empty())
      require(steps.front().cols() == j["dim"].get<std::size_t>(), ErrorKind::Input, "'dim' does not match the first matrix");
    return abgrp::DirectedSystem::explicit_chain(std::move(steps));
  }
  if (mode != "symbolic") fail(ErrorKind::Input, "unknown system mode '" + mode + "'");
  require(j.contains("dim") && j["dim"].is_number_integer(), ErrorKind::Input, "symbolic system needs 'dim'");
  std::size_t k = j["dim"].get<std::size_t>();
  require(k >= 1, ErrorKind::Input, "'dim' must be positive");
  require(j.contains("law") && j["law"].is_array() && j["law"].size() == k, ErrorKind::Input,
          "symbolic system needs one 'law' entry per basis direction");
  PolyMatrix M(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Json& rule = j["law"][i];
    std::string kind = rule.value("kind", "");
    if (kind == "identity")
      M(i, i) = Poly(1);
    else if (kind == "zero")
      M(i, i) = Poly();
    else if (kind == "multiply_by_d")
      M(i, i) = Poly::x();
    else if (kind == "diag_power") {
      require(rule.contains("exp"), ErrorKind::Input, "diag_power needs 'exp'");
      long e = rule["exp"].get<long>();
      require(e >= 0, ErrorKind::Input, "diagonal exponents must be >= 0");
      Rational c = rule.contains("coeff") ? Rational(integer_from_json(rule["coeff"])) : Rational(1);
      M(i, i) = Poly::monomial(c, static_cast<std::size_t>(e));
    } else
      fail(ErrorKind::Input, "unknown law kind '" + kind + "' for direction " + std::to_string(i));
  }
  if (j.contains("offdiag")) {
    for (const auto& e : j["offdiag"]) {
      std::size_t r = index_field(e, "row", k), c = index_field(e, "col", k);
      require(r != c, ErrorKind::Input, "offdiag entries must be off the diagonal");
      require(e.contains("poly") && e["poly"].is_array(), ErrorKind::Input, "offdiag entry needs 'poly'");
      Integer den = e.contains("den") ? integer_from_json(e["den"]) : Integer(1);
      require(den != 0, ErrorKind::Input, "zero denominator in offdiag");
      std::vector<Rational> cs;
      for (const auto& x : e["poly"]) cs.push_back(Rational(integer_from_json(x)) / Rational(den));
      M(r, c) = Poly(cs);
    }
  }
  abgrp::Chain chain = abgrp::Chain::factorial();
  if (j.contains("chain")) {
    std::string ck = j["chain"].value("kind", "factorial");
    if (ck == "factorial")
      chain = abgrp::Chain::factorial();
    else if (ck == "odd")
      chain = abgrp::Chain::odd();
    else if (ck == "constant")
      chain = abgrp::Chain::constant(integer_from_json(j["chain"].at("value")));
    else
      fail(ErrorKind::Input, "unknown chain kind '" + ck + "'");
  }
  return abgrp::DirectedSystem::symbolic({M, chain});
}

PVInput pv_input_from_json(const Json& j) {
  require(j.is_object() && j.contains("k0") && j.contains("k1"), ErrorKind::Input, "pv input needs 'k0' and 'k1'");
  PVInput in;
  in.group.k0 = GroupDescriptor::parse(j["k0"].get<std::string>());
  in.group.k1 = GroupDescriptor::parse(j["k1"].get<std::string>());
  in.action = ktheory::ActionDescriptor::identity(in.group);
  if (j.contains("action")) {
    for (int d = 0; d < 2; ++d) {
      std::string key = std::to_string(d);
      if (!j["action"].contains(key)) continue;
      const Json& a = j["action"][key];
      auto& deg = in.action.degree[d];
      std::size_t N = deg.integral.rows(), q = deg.rational.rows();
      if (a.contains("integral")) deg.integral = int_matrix_from_json(a["integral"]);
      if (a.contains("rational")) deg.rational = rat_matrix_from_json(a["rational"], q, q);
      if (a.contains("mixing")) deg.mixing = rat_matrix_from_json(a["mixing"], q, N);
    }
  }
  return in;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Input, "invalid JSON in '" + path + "': " + e.what());
  }
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items())
    if (v.is_structured() && !(v.is_object() && v.size() <= 3)) return false;
  return true;
}

std::string cell(const Json& v) {
  if (!v.is_object()) return scalar(v);
  std::string s;
  for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + scalar(x);
  return s;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (const auto& [key, v] : j.items()) {
    if (!v.is_structured()) {
      out << indent << key << ": " << scalar(v) << "\n";
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), flat_object)) {
      // Table with one column per key of the first row.
      std::vector<std::string> cols;
      for (const auto& [k, x] : v.front().items()) cols.push_back(k);
      std::vector<std::vector<std::string>> rows;
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(c.size());
      for (const auto& row : v) {
        std::vector<std::string> r;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          r.push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
          width[c] = std::max(width[c], r.back().size());
        }
        rows.push_back(r);
      }
      out << indent << key << ":\n";
      auto line = [&](const std::vector<std::string>& r) {
        out << indent << "  ";
        for (std::size_t c = 0; c < r.size(); ++c) out << r[c] << std::string(width[c] - r[c].size() + 2, ' ');
        out << "\n";
      };
      line(cols);
      for (const auto& r : rows) line(r);
    } else if (v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
      if (v.empty()) {
        out << indent << key << ": (none)\n";
        continue;
      }
      bool nested = std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_array(); });
      if (!nested) {
        out << indent << key << ":\n";
        for (const auto& x : v) out << indent << "  - " << scalar(x) << "\n";
      } else {
        out << indent << key << ":\n";
        for (const auto& x : v) out << indent << "  " << x.dump() << "\n";
      }
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          render(x, indent + "  ", out);
          out << indent << "  --\n";
        } else
          out << indent << "  - " << scalar(x) << "\n";
      }
    } else {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    }
  }
}

}  // namespace

std::string pretty(const Json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace rkt::cli
