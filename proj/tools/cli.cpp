#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "convcodes/combinatorics.hpp"
#include "convcodes/error.hpp"
#include "convcodes/io.hpp"
#include "convcodes/numtheory.hpp"

using namespace convcodes;
using convcodes::io::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFalse = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultDeterminantBudget;
};

struct FieldArgs {
  std::uint32_t p = 2;
  std::uint32_t w = 1;
  std::string modulus;

  void add_to(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--p", p, "field characteristic");
    if (required) opt->required();
    cmd->add_option("--w", w, "extension degree");
    cmd->add_option("--modulus", modulus, "0x-prefixed bit pattern (p = 2) or comma-separated coefficients, constant first");
  }

  FieldPtr make() const {
    if (modulus.empty()) return Field::make_default(p, w);
    FieldSpec spec{p, w, {}};
    if (modulus.size() > 2 && modulus[0] == '0' && (modulus[1] == 'x' || modulus[1] == 'X')) {
      if (p != 2) throw Error(ErrorCode::BadFieldSpec, "hex modulus only makes sense for p = 2");
      const auto bits = std::stoull(modulus.substr(2), nullptr, 16);
      spec.modulus = decode_poly(bits, 2, w + 1);
      if (bits >> (w + 1)) throw Error(ErrorCode::BadFieldSpec, "modulus " + modulus + " has degree above w");
    } else {
      std::stringstream in(modulus);
      for (std::string part; std::getline(in, part, ',');) spec.modulus.push_back(std::stoul(part));
    }
    return Field::make(spec);
  }
};

json read_json(const std::string& path) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (path != "-") {
    in.open(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    src = &in;
  }
  return json::parse(*src);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("cannot write " + path);
  out << text;
}

std::vector<unsigned char> read_bytes(const std::string& path) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (path != "-") {
    in.open(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    src = &in;
  }
  return {std::istreambuf_iterator<char>(*src), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes) {
  if (path.empty() || path == "-") {
    std::cout.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::string join(const std::vector<Elem>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i].value);
  return out;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

void check_binary_field(const Field& f) {
  if (f.p() != 2 || f.w() > 8) throw CLI::ValidationError("--binary needs p = 2 and w <= 8");
}

// ---- field info

int field_info(const Globals& g, const FieldArgs& fa) {
  auto f = fa.make();
  const Elem theta = f->primitive();
  if (g.json_out) {
    json j = io::field_spec_to_json(f->spec());
    j["q"] = f->q();
    j["primitive"] = theta.value;
    j["tables"] = f->has_tables();
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "field: F_" << f->q() << " (p=" << f->p() << ", w=" << f->w() << ")\n";
  std::cout << "modulus (constant first): ";
  for (auto c : f->spec().modulus) std::cout << c << ' ';
  std::cout << "\nprimitive element: " << f->render(theta) << "\n";
  std::cout << "arithmetic: " << (f->has_tables() ? "log tables" : "polynomial") << "\n";
  return kOk;
}

// ---- construct

struct ConstructArgs {
  std::string recipe_path;
  std::string variant = "automorphism";
  std::uint64_t e = 1;
  std::size_t k = 0;
  std::size_t r = 3;
  std::size_t lambda = 0;
  std::string emit = "matrix";
  std::string out;
  bool check = false;
};

int construct(const Globals& g, const FieldArgs& fa, const ConstructArgs& ca) {
  Recipe recipe;
  if (!ca.recipe_path.empty()) {
    recipe = io::recipe_from_json(read_json(ca.recipe_path));
  } else {
    if (ca.k == 0) throw CLI::ValidationError("construct needs --recipe or --k");
    json j = {{"variant", ca.variant}, {"e", ca.e}, {"p", fa.p}, {"w", fa.w}, {"k", ca.k}, {"r", ca.r}};
    recipe = io::recipe_from_json(j);
    recipe.field = fa.make()->spec();
  }
  if (ca.emit == "pair") {
    if (ca.lambda < 2) throw CLI::ValidationError("--emit pair needs --lambda >= 2");
    // Recipe k is the initial dimension here; the guarantee must reach lambda k.
    Recipe final_recipe = recipe;
    final_recipe.k = recipe.k * ca.lambda;
    auto c = build_parity(final_recipe);
    auto pair = ConvertiblePair::make(c.field, recipe.k, recipe.r, ca.lambda, c.scalars, c.guarantee);
    write_text(ca.out, io::pair_to_json(pair).dump(2) + "\n");
    if (!ca.out.empty() && !g.json_out) {
      std::cout << "wrote [" << pair.n_initial() << "," << pair.k_initial() << "] -> [" << pair.n_final() << ","
                << pair.k_final() << "] pair (" << guarantee_name(pair.guarantee()) << ") to " << ca.out << "\n";
    }
    return kOk;
  }

  auto c = build_parity(recipe);
  std::optional<SuperRegularity> verdict;
  if (ca.check) {
    SuperRegularOptions opts;
    opts.max_determinants = g.budget;
    verdict = check_super_regular(c.parity, opts);
  }
  json doc;
  if (ca.emit == "code") {
    doc = io::code_to_json(SystematicCode(c.parity));
  } else if (ca.emit == "matrix") {
    doc = io::matrix_to_json(c.parity);
  } else {
    throw CLI::ValidationError("--emit must be matrix, code or pair");
  }
  doc["guarantee"] = guarantee_name(c.guarantee);
  doc["scalars"] = io::elems_to_json(c.scalars);
  if (verdict) doc["super_regular"] = verdict->super_regular;

  if (ca.out.empty()) {
    std::cout << doc.dump(g.json_out ? -1 : 2) << '\n';
  } else {
    write_text(ca.out, doc.dump(2) + "\n");
    if (g.json_out) {
      std::cout << json{{"out", ca.out}, {"guarantee", guarantee_name(c.guarantee)}}.dump() << '\n';
    } else {
      std::cout << "wrote " << c.parity.rows() << "x" << c.parity.cols() << " parity over F_" << c.field->q()
                << " (" << guarantee_name(c.guarantee) << ") to " << ca.out << "\n";
    }
  }
  return verdict && !verdict->super_regular ? kPropertyFalse : kOk;
}

// ---- verify

int verify(const Globals& g, const std::string& path, bool full) {
  const json doc = read_json(path);
  // Accept a bare matrix, or a code/pair document carrying one.
  Matrix m = doc.contains("parity") ? io::code_from_json(doc).parity() : io::matrix_from_json(doc);
  SuperRegularOptions opts;
  opts.use_vandermonde_reduction = !full;
  opts.max_determinants = g.budget;
  auto res = check_super_regular(m, opts);
  if (g.json_out) {
    json j = {{"super_regular", res.super_regular}, {"determinants", res.determinants}, {"reduced", res.reduced}};
    j["witness"] = res.witness ? io::selector_to_json(*res.witness) : json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "super-regular: " << (res.super_regular ? "true" : "false") << "\n";
    std::cout << "determinants: " << res.determinants << (res.reduced ? " (row-1 reduced)" : "") << "\n";
    if (res.witness) {
      std::cout << "singular submatrix: rows {" << join(res.witness->rows) << "} cols {" << join(res.witness->cols)
                << "}\n";
    }
  }
  return res.super_regular ? kOk : kPropertyFalse;
}

// ---- bounds check

int bounds_check(const Globals& g, std::uint64_t q, std::uint64_t k, std::uint64_t r) {
  auto verdict = lower_bound_check(q, k, r);
  const BigInt threshold = existence_threshold(k, r);
  if (g.json_out) {
    json j = io::verdict_to_json(verdict);
    j["q"] = q;
    j["k"] = k;
    j["r"] = r;
    j["threshold"] = threshold.str();
    j["above_threshold"] = BigInt(q) > threshold;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "q=" << q << " k=" << k << " r=" << r << ": " << (verdict.feasible ? "feasible" : "infeasible")
              << "\n";
    for (const auto& v : verdict.violations) {
      if (v.rule == "divisor") {
        std::cout << "  divisor m=" << v.parameter << " of q-1 is below k, needs q >= " << v.required_q << "\n";
      } else {
        std::cout << "  characteristic 2 with k > r=" << v.parameter << " needs q >= " << v.required_q << "\n";
      }
    }
    std::cout << "existence guaranteed above q = " << threshold.str()
              << (BigInt(q) > threshold ? " (q is above)" : "") << "\n";
  }
  return verdict.feasible ? kOk : kPropertyFalse;
}

// ---- search

struct SearchArgs {
  std::size_t k = 0;
  std::size_t r = 0;
  std::uint64_t trials = 0;
  std::uint64_t max_q = 0;
};

int search(const Globals& g, const FieldArgs& fa, const SearchArgs& sa, bool have_field) {
  if (sa.max_q) {
    auto family = prime_power_family(2, sa.max_q);
    auto frontier = empirical_min_q(sa.k, sa.r, family, g.budget);
    if (g.json_out) {
      json rows = json::array();
      for (const auto& row : frontier.rows) {
        const char* status =
            row.status == Existence::Exists ? "true" : row.status == Existence::Absent ? "false" : "unknown";
        rows.push_back({{"q", row.q},
                        {"exists", status},
                        {"witness", row.witness ? io::elems_to_json(*row.witness) : json(nullptr)},
                        {"lower_bounds", io::verdict_to_json(row.lower_bounds)}});
      }
      json j = {{"k", sa.k},
                {"r", sa.r},
                {"threshold", frontier.threshold.str()},
                {"rows", rows},
                {"first_exists", frontier.first_exists ? json(*frontier.first_exists) : json(nullptr)},
                {"inconsistencies", frontier.inconsistencies}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << io::csv_header() << io::csv_rows(frontier);
      for (const auto& msg : frontier.inconsistencies) std::cerr << "inconsistent: " << msg << "\n";
    }
    return frontier.inconsistencies.empty() ? kOk : kPropertyFalse;
  }
  if (!have_field) throw CLI::ValidationError("search needs --p (and --w) or --max-q");
  auto f = fa.make();
  auto report = sa.trials ? random_search(f, sa.k, sa.r, sa.trials, g.seed)
                          : exhaustive_search(f, sa.k, sa.r, g.budget);
  if (g.json_out) {
    std::cout << io::report_to_json(report).dump() << '\n';
  } else {
    std::cout << io::csv_header() << io::csv_row(report);
  }
  return kOk;
}

// ---- encode / decode

struct CodingArgs {
  std::string code_path;
  std::string input = "-";
  std::string out;
  bool binary = false;
  std::vector<std::size_t> erased;
};

int encode(const Globals& g, const CodingArgs& ca) {
  auto code = io::code_from_json(read_json(ca.code_path));
  const Field& f = *code.field();
  if (ca.binary) {
    check_binary_field(f);
    auto bytes = read_bytes(ca.input);
    if (bytes.size() % code.k()) {
      throw Error(ErrorCode::LengthMismatch, std::to_string(bytes.size()) + " input bytes is not a multiple of k = " +
                                                 std::to_string(code.k()));
    }
    std::vector<unsigned char> out;
    std::vector<Elem> message(code.k());
    for (std::size_t at = 0; at < bytes.size(); at += code.k()) {
      for (std::size_t i = 0; i < code.k(); ++i) message[i] = f.elem(bytes[at + i]);
      for (auto s : code.encode(message)) out.push_back(static_cast<unsigned char>(s.value));
    }
    write_bytes(ca.out, out);
    return kOk;
  }
  auto message = io::elems_from_json(f, read_json(ca.input));
  auto word = code.encode(message);
  write_text(ca.out, io::codeword_to_json(word).dump() + "\n");
  (void)g;
  return kOk;
}

int decode(const Globals& g, const CodingArgs& ca) {
  auto code = io::code_from_json(read_json(ca.code_path));
  const Field& f = *code.field();
  if (ca.binary) {
    check_binary_field(f);
    auto bytes = read_bytes(ca.input);
    if (bytes.size() % code.n()) {
      throw Error(ErrorCode::LengthMismatch, std::to_string(bytes.size()) + " input bytes is not a multiple of n = " +
                                                 std::to_string(code.n()));
    }
    std::vector<unsigned char> out;
    for (std::size_t at = 0; at < bytes.size(); at += code.n()) {
      Codeword received;
      for (std::size_t i = 0; i < code.n(); ++i) received.emplace_back(f.elem(bytes[at + i]));
      for (auto i : ca.erased) {
        if (i >= code.n()) throw CLI::ValidationError("--erase position " + std::to_string(i) + " is past n");
        received[i].reset();
      }
      for (auto s : code.decode(received)) out.push_back(static_cast<unsigned char>(s.value));
    }
    write_bytes(ca.out, out);
    return kOk;
  }
  auto received = io::codeword_from_json(f, read_json(ca.input));
  for (auto i : ca.erased) {
    if (i < received.size()) received[i].reset();
  }
  auto message = code.decode(received);
  write_text(ca.out, io::elems_to_json(message).dump() + "\n");
  (void)g;
  return kOk;
}

// ---- convert

int convert(const Globals& g, const std::string& pair_path, const std::vector<std::string>& inputs,
            const std::string& out, bool stats) {
  auto pair = io::pair_from_json(read_json(pair_path));
  std::vector<std::vector<Elem>> initial;
  for (const auto& path : inputs) initial.push_back(io::elems_from_json(*pair.field(), read_json(path)));
  auto merged = pair.convert_merge(initial, true);
  auto baseline = pair.default_convert(initial);
  const json word = io::codeword_to_json(merged.codeword);
  const json stats_json = io::stats_to_json(merged.stats, baseline.stats);

  if (!out.empty()) {
    write_text(out, word.dump() + "\n");
    if (stats) std::cout << stats_json.dump() << '\n';
    return kOk;
  }
  if (stats && g.json_out) {
    std::cout << json{{"codeword", word}, {"stats", stats_json}}.dump() << '\n';
  } else {
    std::cout << word.dump() << '\n';
    if (stats) std::cout << stats_json.dump() << '\n';
  }
  return kOk;
}

// ---- demo

struct DemoArgs {
  std::uint32_t p = 2;
  std::uint32_t w = 8;
  std::size_t k_initial = 4;
  std::size_t r = 3;
  std::size_t lambda = 2;
};

int demo(const Globals& g, const DemoArgs& da) {
  auto f = Field::make_default(da.p, da.w);
  std::mt19937_64 rng(g.seed);
  const std::size_t k_final = da.k_initial * da.lambda;

  // Automorphism scalars when a guarantee reaches kF, otherwise an exhaustive search.
  std::optional<ConvertiblePair> pair;
  if (da.r <= 3 && f->w() >= 2) {
    auto c = build_parity({Variant::Automorphism, 1, f->spec(), k_final, da.r});
    if (c.guarantee != Guarantee::Unverified) {
      pair = ConvertiblePair::make(f, da.k_initial, da.r, da.lambda, c.scalars, c.guarantee);
    }
  }
  if (!pair) {
    auto found = exhaustive_search(f, k_final, da.r, g.budget);
    if (!found.exists) {
      std::cerr << "no super-regular " << k_final << "x" << da.r << " Vandermonde matrix over F_" << f->q() << "\n";
      return kPropertyFalse;
    }
    pair = ConvertiblePair::make(f, da.k_initial, da.r, da.lambda, *found.witness);
  }

  std::vector<Elem> message(k_final);
  std::uniform_int_distribution<std::uint32_t> symbol(0, static_cast<std::uint32_t>(f->q() - 1));
  for (auto& m : message) m = Elem{symbol(rng)};
  auto initial = pair->encode_initial(message);
  auto merged = pair->convert_merge(initial, true);
  auto baseline = pair->default_convert(initial);

  // Lose r random symbols of the converted codeword and decode.
  std::vector<std::size_t> positions(pair->n_final());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  positions.resize(da.r);
  std::sort(positions.begin(), positions.end());
  Codeword received = to_received(merged.codeword);
  for (auto i : positions) received[i].reset();
  const bool recovered = pair->final_code().decode(received) == message;
  const bool agrees = merged.codeword == baseline.codeword;

  if (g.json_out) {
    json j = {{"pair", io::pair_to_json(*pair)},
              {"seed", g.seed},
              {"message", io::elems_to_json(message)},
              {"codeword", io::codeword_to_json(merged.codeword)},
              {"stats", io::stats_to_json(merged.stats, baseline.stats)},
              {"default_written", baseline.stats.symbols_written},
              {"matches_default", agrees},
              {"erased", positions},
              {"recovered", recovered}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "pair: [" << pair->n_initial() << "," << pair->k_initial() << "] x " << da.lambda << " -> ["
              << pair->n_final() << "," << pair->k_final() << "] over F_" << f->q() << ", scalars "
              << join(pair->scalars()) << " (" << guarantee_name(pair->guarantee()) << ")\n";
    std::cout << "message: " << join(message) << "\n";
    std::cout << "converted: " << join(merged.codeword) << "\n";
    std::cout << "matches re-encoding: " << (agrees ? "yes" : "no") << "\n";
    std::cout << "convertible: read=" << merged.stats.symbols_read << " write=" << merged.stats.symbols_written
              << "\n";
    std::cout << "default:     read=" << baseline.stats.symbols_read << " write=" << baseline.stats.symbols_written
              << "\n";
    std::cout << "erased {" << join(positions) << "}, recovered: " << (recovered ? "yes" : "no") << "\n";
  }
  return agrees && recovered ? kOk : kPropertyFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convertible-code toolkit: finite fields, super-regular Vandermonde parities, merge conversion"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for every random choice");
  app.add_option("--budget", g.budget, "determinant budget for searches and verification");

  auto* field_cmd = app.add_subcommand("field", "finite field inspection");
  field_cmd->require_subcommand(1);
  field_cmd->fallthrough();
  auto* info_cmd = field_cmd->add_subcommand("info", "modulus, primitive element and arithmetic mode");
  FieldArgs info_field;
  info_field.add_to(info_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "build a Vandermonde parity matrix from a recipe");
  ConstructArgs ca;
  FieldArgs construct_field;
  construct_field.add_to(construct_cmd, false);
  construct_cmd->add_option("--recipe", ca.recipe_path, "recipe JSON file");
  construct_cmd->add_option("--variant", ca.variant, "automorphism, coprime or consecutive");
  construct_cmd->add_option("--e", ca.e, "automorphism or coprime exponent");
  construct_cmd->add_option("--k", ca.k, "rows (message length)");
  construct_cmd->add_option("--r", ca.r, "columns (parities)");
  construct_cmd->add_option("--emit", ca.emit, "matrix, code or pair");
  construct_cmd->add_option("--lambda", ca.lambda, "merge factor for --emit pair");
  construct_cmd->add_option("--out", ca.out, "output file");
  construct_cmd->add_flag("--check", ca.check, "also run the super-regularity scan");

  auto* verify_cmd = app.add_subcommand("verify", "check a matrix for super-regularity");
  std::string matrix_path;
  bool full = false;
  verify_cmd->add_option("--matrix", matrix_path, "matrix or code JSON file")->required();
  verify_cmd->add_flag("--full", full, "disable the row-1 reduction for Vandermonde input");

  auto* bounds_cmd = app.add_subcommand("bounds", "field size bounds");
  bounds_cmd->require_subcommand(1);
  bounds_cmd->fallthrough();
  auto* check_cmd = bounds_cmd->add_subcommand("check", "lower-bound verdict and existence threshold");
  std::uint64_t bq = 0, bk = 0, br = 0;
  check_cmd->add_option("--q", bq, "field size")->required();
  check_cmd->add_option("--k", bk, "rows")->required();
  check_cmd->add_option("--r", br, "columns")->required();

  auto* search_cmd = app.add_subcommand("search", "search for super-regular Vandermonde scalars");
  FieldArgs search_field;
  search_field.add_to(search_cmd, false);
  SearchArgs sa;
  search_cmd->add_option("--k", sa.k, "rows")->required();
  search_cmd->add_option("--r", sa.r, "columns")->required();
  search_cmd->add_option("--trials", sa.trials, "random draws instead of exhaustive search");
  search_cmd->add_option("--max-q", sa.max_q, "frontier over every prime power up to this q");

  CodingArgs enc, dec;
  auto* encode_cmd = app.add_subcommand("encode", "systematic encoding");
  encode_cmd->add_option("--code", enc.code_path, "code JSON file")->required();
  encode_cmd->add_option("--in", enc.input, "message JSON array, or raw bytes with --binary");
  encode_cmd->add_option("--out", enc.out, "output file");
  encode_cmd->add_flag("--binary", enc.binary, "one byte per symbol, k-byte stripes in, n-byte stripes out");

  auto* decode_cmd = app.add_subcommand("decode", "erasure decoding");
  decode_cmd->add_option("--code", dec.code_path, "code JSON file")->required();
  decode_cmd->add_option("--in", dec.input, "codeword JSON array with null erasures, or raw bytes with --binary");
  decode_cmd->add_option("--out", dec.out, "output file");
  decode_cmd->add_option("--erase", dec.erased, "0-indexed positions to treat as erased")->delimiter(',');
  decode_cmd->add_flag("--binary", dec.binary, "n-byte stripes in, k-byte stripes out");

  auto* convert_cmd = app.add_subcommand("convert", "merge initial codewords into one final codeword");
  std::string pair_path, convert_out;
  std::vector<std::string> inputs;
  bool stats = false;
  convert_cmd->add_option("--pair", pair_path, "pair JSON file")->required();
  convert_cmd->add_option("--in", inputs, "one JSON codeword file per initial codeword")->required();
  convert_cmd->add_option("--out", convert_out, "output file for the final codeword");
  convert_cmd->add_flag("--stats", stats, "report symbols read and written against re-encoding");

  auto* demo_cmd = app.add_subcommand("demo", "encode, convert and decode random data");
  DemoArgs da;
  demo_cmd->add_option("--p", da.p, "field characteristic");
  demo_cmd->add_option("--w", da.w, "extension degree");
  demo_cmd->add_option("--kI", da.k_initial, "initial message length");
  demo_cmd->add_option("--r", da.r, "parities");
  demo_cmd->add_option("--lambda", da.lambda, "codewords merged");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info_cmd) return field_info(g, info_field);
    if (*construct_cmd) return construct(g, construct_field, ca);
    if (*verify_cmd) return verify(g, matrix_path, full);
    if (*check_cmd) return bounds_check(g, bq, bk, br);
    if (*search_cmd) return search(g, search_field, sa, search_cmd->count("--p") > 0);
    if (*encode_cmd) return encode(g, enc);
    if (*decode_cmd) return decode(g, dec);
    if (*convert_cmd) return convert(g, pair_path, inputs, convert_out, stats);
    if (*demo_cmd) return demo(g, da);
  } catch (const Error& e) {
    if (g.json_out) {
      std::cout << json{{"error", error_name(e.code())}, {"code", static_cast<int>(e.code())}, {"message", e.what()}}
                       .dump()
                << '\n';
    }
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
