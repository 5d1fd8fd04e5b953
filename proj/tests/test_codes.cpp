#include <doctest.h>

#include <random>

#include "convcodes/codes.hpp"
#include "convcodes/combinatorics.hpp"
#include "convcodes/constructions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace convcodes;

namespace {

std::vector<Elem> elems(std::initializer_list<std::uint32_t> values) {
  std::vector<Elem> out;
  for (auto v : values) out.push_back(Elem{v});
  return out;
}

std::vector<Elem> random_message(const Field& f, std::size_t k, std::mt19937_64& rng) {
  std::vector<Elem> m;
  for (std::size_t i = 0; i < k; ++i) m.push_back(oracle::random_elem(f, rng));
  return m;
}

// True if every maximal erasure pattern of code decodes m back.
bool all_patterns_decode(const SystematicCode& code, const std::vector<Elem>& m) {
  const auto c = code.encode(m);
  auto erased = first_combination(code.r(), 0);
  do {
    Codeword received = to_received(c);
    for (auto i : erased) received[i].reset();
    try {
      if (code.decode(received) != m) return false;
    } catch (const Error&) {
      return false;
    }
  } while (next_combination(erased, code.n() - 1));
  return true;
}

}  // namespace

TEST_CASE("encode examples") {
  auto f5 = Field::make_default(5, 1);
  SystematicCode code(vandermonde(f5, 2, elems({1, 2})));
  CHECK(code.n() == 4);
  CHECK(code.encode(elems({1, 1})) == elems({1, 1, 2, 3}));
  CHECK(code.encode(elems({0, 0})) == elems({0, 0, 0, 0}));
  CHECK(code.encode(elems({0, 1})) == elems({0, 1, 1, 2}));
  CHECK(thrown_code([&] { code.encode(elems({1})); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("unit messages pick out parity rows") {
  auto f = Field::make_default(2, 8);
  std::mt19937_64 rng(3);
  auto p = oracle::random_matrix(f, 5, 3, rng);
  SystematicCode code(p);
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Elem> m(5, f->zero());
    m[i] = f->one();
    auto c = code.encode(m);
    CHECK(std::vector<Elem>(c.begin() + 5, c.end()) == std::vector<Elem>(p.row(i).begin(), p.row(i).end()));
  }
}

TEST_CASE("decode examples") {
  auto construction = build_parity({Variant::Automorphism, 1, default_field_spec(2, 8), 6, 3});
  SystematicCode code(construction.parity);
  CHECK(code.is_mds());
  const auto m = elems({9, 200, 0, 17, 255, 1});
  const auto c = code.encode(m);
  CHECK(code.decode(to_received(c)) == m);

  Codeword parity_lost = to_received(c);
  for (std::size_t j = 6; j < 9; ++j) parity_lost[j].reset();
  CHECK(code.decode(parity_lost) == m);

  Codeword too_few = to_received(c);
  for (std::size_t j : {0, 1, 2, 3}) too_few[j].reset();
  CHECK(thrown_code([&] { code.decode(too_few); }) == ErrorCode::TooFewSymbols);
  CHECK(thrown_code([&] { code.decode(Codeword(4)); }) == ErrorCode::LengthMismatch);

  // V_3(1,4) over F_5: rows {1,3} x cols {1,2} are singular.
  auto f5 = Field::make_default(5, 1);
  SystematicCode bad(vandermonde(f5, 3, elems({1, 4})));
  CHECK_FALSE(bad.is_mds());
  Codeword received = to_received(bad.encode(elems({1, 2, 3})));
  received[0].reset();
  received[2].reset();
  CHECK(thrown_code([&] { bad.decode(received); }) == ErrorCode::SingularSubsystem);
}

TEST_CASE("single parity column") {
  auto f = Field::make_default(7, 1);
  SystematicCode code(Matrix(f, 4, 1, elems({3, 1, 6, 2})));
  CHECK(code.is_mds());
  CHECK(thrown_code([&] { SystematicCode(Matrix(f, 0, 1)); }) == ErrorCode::BadCode);
}

TEST_CASE("round trip over every maximal erasure pattern") {
  std::mt19937_64 rng(5);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 8}, {2, 6}, {3, 4}, {13, 1}, {2, 5}};
  int tested = 0;
  for (int t = 0; t < 60; ++t) {
    auto [p, w] = fields[t % fields.size()];
    auto f = Field::make_default(p, w);
    const std::size_t k = 2 + rng() % 7;
    const std::size_t r = 1 + rng() % std::min<std::size_t>(4, 12 - k);
    std::vector<Elem> xi;
    for (std::size_t j = 0; j < r; ++j) xi.push_back(oracle::random_nonzero(*f, rng));
    SystematicCode code(vandermonde(f, k, xi));
    if (!code.is_mds()) continue;
    ++tested;
    REQUIRE(all_patterns_decode(code, random_message(*f, k, rng)));
  }
  CHECK(tested > 20);
}

TEST_CASE("is_mds iff every survivor set decodes") {
  std::mt19937_64 rng(6);
  int mds = 0, non_mds = 0;
  for (int t = 0; t < 200; ++t) {
    auto f = Field::make_default(t % 2 ? 5 : 7, 1);
    const std::size_t k = 2 + rng() % 4;
    const std::size_t r = 1 + rng() % 4;
    std::vector<Elem> xi;
    for (std::size_t j = 0; j < r; ++j) xi.push_back(oracle::random_nonzero(*f, rng));
    SystematicCode code(vandermonde(f, k, xi));
    const bool decodes = all_patterns_decode(code, random_message(*f, k, rng));
    // A maximal pattern leaves exactly |U| parities for |U| erased data
    // symbols, so every square submatrix of P gets exercised.
    REQUIRE(code.is_mds() == decodes);
    (code.is_mds() ? mds : non_mds)++;
  }
  CHECK(mds > 10);
  CHECK(non_mds > 10);
}

TEST_CASE("encoding is linear") {
  std::mt19937_64 rng(11);
  for (auto [p, w] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 8}, {3, 3}, {11, 1}}) {
    auto f = Field::make_default(p, w);
    SystematicCode code(oracle::random_matrix(f, 6, 4, rng));
    for (int t = 0; t < 50; ++t) {
      auto m1 = random_message(*f, 6, rng);
      auto m2 = random_message(*f, 6, rng);
      const Elem a = oracle::random_elem(*f, rng);
      std::vector<Elem> mix;
      for (std::size_t i = 0; i < 6; ++i) mix.push_back(f->add(f->mul(a, m1[i]), m2[i]));
      auto c1 = code.encode(m1), c2 = code.encode(m2), c = code.encode(mix);
      for (std::size_t i = 0; i < c.size(); ++i) REQUIRE(c[i] == f->add(f->mul(a, c1[i]), c2[i]));
    }
  }
}
