#include "convcodes/io.hpp"

#include <sstream>

#include "convcodes/error.hpp"
#include "convcodes/numtheory.hpp"

namespace convcodes::io {
namespace {

std::string witness_string(const std::optional<std::vector<Elem>>& witness) {
  if (!witness) return "";
  std::string out;
  for (std::size_t i = 0; i < witness->size(); ++i) out += (i ? " " : "") + std::to_string((*witness)[i].value);
  return out;
}

Guarantee guarantee_from_name(const std::string& name) {
  for (auto g : {Guarantee::Unverified, Guarantee::GeneralField, Guarantee::Char2}) {
    if (guarantee_name(g) == name) return g;
  }
  throw Error(ErrorCode::BadCode, "unknown guarantee '" + name + "'");
}

}  // namespace

json field_spec_to_json(const FieldSpec& spec) {
  json j = {{"p", spec.p}, {"w", spec.w}};
  j["modulus"] = spec.modulus;
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto w = j.value("w", std::uint32_t{1});
  if (!j.contains("modulus") || j.at("modulus").empty()) return default_field_spec(p, w);
  return FieldSpec{p, w, j.at("modulus").get<std::vector<std::uint32_t>>()};
}

Elem elem_from_json(const Field& field, const json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::OutOfRange, "field element must be a nonnegative integer, got " + j.dump());
  }
  return field.elem(j.get<std::uint64_t>());
}

std::vector<Elem> elems_from_json(const Field& field, const json& j) {
  std::vector<Elem> out;
  for (const auto& v : j) out.push_back(elem_from_json(field, v));
  return out;
}

json elems_to_json(const std::vector<Elem>& values) {
  json arr = json::array();
  for (auto v : values) arr.push_back(v.value);
  return arr;
}

json matrix_to_json(const Matrix& m, bool with_field) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (auto e : m.row(i)) row.push_back(e.value);
    entries.push_back(std::move(row));
  }
  json j = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
  if (with_field) j["field"] = field_spec_to_json(m.field()->spec());
  return j;
}

Matrix matrix_from_json(const json& j, const FieldPtr& field) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw Error(ErrorCode::ShapeMismatch, "entries has wrong number of rows");
  std::vector<Elem> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (row.size() != cols) throw Error(ErrorCode::ShapeMismatch, "entries row has wrong length");
    for (const auto& v : row) flat.push_back(elem_from_json(*field, v));
  }
  return Matrix(field, rows, cols, std::move(flat));
}

Matrix matrix_from_json(const json& j) {
  return matrix_from_json(j, Field::make(field_spec_from_json(j.at("field"))));
}

json recipe_to_json(const Recipe& recipe) {
  json j = {{"variant", variant_name(recipe.variant)},
            {"e", recipe.e},
            {"p", recipe.field.p},
            {"w", recipe.field.w},
            {"k", recipe.k},
            {"r", recipe.r}};
  j["modulus"] = recipe.field.modulus;
  return j;
}

Recipe recipe_from_json(const json& j) {
  Recipe recipe;
  const auto variant = j.value("variant", std::string("automorphism"));
  if (variant == "automorphism") {
    recipe.variant = Variant::Automorphism;
  } else if (variant == "coprime") {
    recipe.variant = Variant::CoprimeExponent;
  } else if (variant == "consecutive") {
    recipe.variant = Variant::ConsecutivePowers;
  } else {
    throw Error(ErrorCode::PreconditionViolated, "unknown recipe variant '" + variant + "'");
  }
  recipe.e = j.value("e", std::uint64_t{1});
  recipe.field = field_spec_from_json(j);
  recipe.k = j.at("k").get<std::size_t>();
  recipe.r = j.value("r", std::size_t{3});
  return recipe;
}

json codeword_to_json(const Codeword& word) {
  json arr = json::array();
  for (const auto& s : word) {
    if (s) {
      arr.push_back(s->value);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

json codeword_to_json(const std::vector<Elem>& word) { return elems_to_json(word); }

Codeword codeword_from_json(const Field& field, const json& j) {
  Codeword word;
  for (const auto& v : j) {
    if (v.is_null()) {
      word.emplace_back(std::nullopt);
    } else {
      word.emplace_back(elem_from_json(field, v));
    }
  }
  return word;
}

json code_to_json(const SystematicCode& code) {
  return {{"field", field_spec_to_json(code.field()->spec())},
          {"n", code.n()},
          {"k", code.k()},
          {"parity", matrix_to_json(code.parity(), false)}};
}

SystematicCode code_from_json(const json& j) {
  auto field = Field::make(field_spec_from_json(j.at("field")));
  SystematicCode code(matrix_from_json(j.at("parity"), field));
  if (j.contains("n") && j.at("n").get<std::size_t>() != code.n()) {
    throw Error(ErrorCode::BadCode, "declared n disagrees with the parity matrix");
  }
  return code;
}

json pair_to_json(const ConvertiblePair& pair) {
  json j = {{"field", field_spec_to_json(pair.field()->spec())},
            {"kI", pair.k_initial()},
            {"r", pair.r()},
            {"lambda", pair.lambda()},
            {"xi", elems_to_json(pair.scalars())},
            {"guarantee", guarantee_name(pair.guarantee())}};
  if (!pair.final_is_mds()) j["require_mds"] = false;
  return j;
}

ConvertiblePair pair_from_json(const json& j) {
  auto field = Field::make(field_spec_from_json(j.at("field")));
  auto xi = elems_from_json(*field, j.at("xi"));
  Guarantee claimed = Guarantee::Unverified;
  if (j.contains("guarantee")) claimed = guarantee_from_name(j.at("guarantee").get<std::string>());
  return ConvertiblePair::make(field, j.at("kI").get<std::size_t>(), j.value("r", xi.size()),
                               j.at("lambda").get<std::size_t>(), std::move(xi), claimed,
                               j.value("require_mds", true));
}

json selector_to_json(const Selector& s) { return {{"rows", s.rows}, {"cols", s.cols}}; }

json verdict_to_json(const FeasibilityVerdict& v) {
  json violations = json::array();
  for (const auto& x : v.violations) {
    violations.push_back({{"rule", x.rule}, {"parameter", x.parameter}, {"required_q", x.required_q}});
  }
  json j = {{"feasible", v.feasible}, {"violations", std::move(violations)}};
  if (v.witness) j["witness"] = selector_to_json(*v.witness);
  return j;
}

json stats_to_json(const AccessStats& converted, const AccessStats& baseline) {
  return {{"read", converted.symbols_read},
          {"written", converted.symbols_written},
          {"default_read", baseline.symbols_read}};
}

json report_to_json(const SearchReport& report) {
  json j = {{"field", field_spec_to_json(report.field)},
            {"q", ipow(report.field.p, report.field.w)},
            {"k", report.k},
            {"r", report.r},
            {"exists", report.exists},
            {"sets_examined", report.sets_examined},
            {"determinants", report.determinants}};
  j["witness"] = report.witness ? elems_to_json(*report.witness) : json(nullptr);
  j["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  return j;
}

std::string csv_header() { return "q,k,r,exists,witness\n"; }

std::string csv_row(const SearchReport& report) {
  std::ostringstream out;
  out << ipow(report.field.p, report.field.w) << ',' << report.k << ',' << report.r << ','
      << (report.exists ? "true" : "false") << ',' << witness_string(report.witness) << '\n';
  return out.str();
}

std::string csv_rows(const Frontier& frontier) {
  std::ostringstream out;
  for (const auto& row : frontier.rows) {
    const char* status = row.status == Existence::Exists ? "true" : row.status == Existence::Absent ? "false" : "unknown";
    out << row.q << ',' << frontier.k << ',' << frontier.r << ',' << status << ',' << witness_string(row.witness)
        << '\n';
  }
  return out.str();
}

}  // namespace convcodes::io
