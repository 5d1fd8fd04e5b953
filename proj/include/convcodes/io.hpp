#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "convcodes/bounds.hpp"
#include "convcodes/codes.hpp"
#include "convcodes/constructions.hpp"
#include "convcodes/convert.hpp"
#include "convcodes/galois.hpp"
#include "convcodes/matrix.hpp"
#include "convcodes/search.hpp"

// JSON and CSV wire formats. Field elements are written as decimal integers;
// readers also accept "0x.." strings when p = 2.
namespace convcodes::io {

using nlohmann::json;

// {"p": 2, "w": 8, "modulus": [1,0,1,1,1,0,0,0,1]}; modulus constant term
// first. A missing modulus selects the default one.
json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

Elem elem_from_json(const Field& field, const json& j);
std::vector<Elem> elems_from_json(const Field& field, const json& j);
json elems_to_json(const std::vector<Elem>& values);

// {"rows": k, "cols": r, "entries": [[...], ...]}; optionally carries a
// "field" member so the file is self-describing.
json matrix_to_json(const Matrix& m, bool with_field = true);
Matrix matrix_from_json(const json& j, const FieldPtr& field);
Matrix matrix_from_json(const json& j);

// {"variant": "automorphism", "e": 1, "p": 2, "w": 8, "k": 200, "r": 3}
json recipe_to_json(const Recipe& recipe);
Recipe recipe_from_json(const json& j);

// Length-n array, null for erasures.
json codeword_to_json(const Codeword& word);
json codeword_to_json(const std::vector<Elem>& word);
Codeword codeword_from_json(const Field& field, const json& j);

// {"field": {...}, "parity": {matrix}}
json code_to_json(const SystematicCode& code);
SystematicCode code_from_json(const json& j);

// {"field": {...}, "kI": 4, "r": 3, "lambda": 2, "xi": [...], "guarantee": "..."}
// plus "require_mds": false for pairs whose final code is not MDS.
json pair_to_json(const ConvertiblePair& pair);
ConvertiblePair pair_from_json(const json& j);

json selector_to_json(const Selector& s);
json verdict_to_json(const FeasibilityVerdict& v);
json stats_to_json(const AccessStats& converted, const AccessStats& baseline);
json report_to_json(const SearchReport& report);

std::string csv_header();
std::string csv_row(const SearchReport& report);
std::string csv_rows(const Frontier& frontier);

}  // namespace convcodes::io
