#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "convcodes/error.hpp"
#include "convcodes/galois.hpp"
#include "convcodes/numtheory.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace convcodes;

namespace {

// Irreducibility over F_2 by dividing by every polynomial of degree 1..deg/2,
// using plain bit arithmetic.
bool gf2_irreducible(std::uint64_t poly) {
  const int deg = 63 - __builtin_clzll(poly);
  for (std::uint64_t g = 2; g < (std::uint64_t{1} << (deg / 2 + 1)); ++g) {
    const int gdeg = 63 - __builtin_clzll(g);
    if (gdeg < 1) continue;
    std::uint64_t r = poly;
    while (r != 0 && 63 - __builtin_clzll(r) >= gdeg) r ^= g << ((63 - __builtin_clzll(r)) - gdeg);
    if (r == 0) return false;
  }
  return true;
}

std::vector<FieldPtr> small_fields() {
  std::vector<FieldPtr> out;
  for (auto [p, w] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}}) {
    out.push_back(Field::make_default(p, w));
  }
  return out;
}

}  // namespace

TEST_CASE("make_field accepts prime fields and irreducible moduli") {
  auto f2 = Field::make({2, 1, {}});
  CHECK(f2->q() == 2);

  CHECK(gf2_irreducible(0x11D));
  auto f256 = Field::make({2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}});
  CHECK(f256->q() == 256);
  CHECK(f256->has_tables());
  CHECK(encode_poly(f256->spec().modulus, 2) == 0x11D);
}

TEST_CASE("make_field rejects bad specs") {
  try {
    Field::make({2, 3, {0, 0, 1, 1}});  // x^3 + x^2
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
    CHECK(std::string(e.what()).find("factor x") != std::string::npos);
  }
  CHECK(thrown_code([] { Field::make({4, 1, {}}); }) == ErrorCode::NotPrime);
  CHECK(thrown_code([] { Field::make({9, 2, {1, 0, 1}}); }) == ErrorCode::NotPrime);
  CHECK(thrown_code([] { Field::make({2, 3, {1, 1, 0, 2}}); }) == ErrorCode::BadFieldSpec);
  CHECK(thrown_code([] { Field::make({2, 3, {1, 1, 1}}); }) == ErrorCode::BadFieldSpec);
  CHECK(thrown_code([] { Field::make({2, 33, {}}); }) == ErrorCode::BadFieldSpec);
}

TEST_CASE("default moduli are the smallest irreducible encodings") {
  CHECK(encode_poly(default_field_spec(2, 3).modulus, 2) == 0b1011);
  CHECK(encode_poly(default_field_spec(2, 4).modulus, 2) == 0b10011);
  CHECK(default_field_spec(3, 2).modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(encode_poly(default_field_spec(2, 8).modulus, 2) == 0x11D);
  for (std::uint32_t w = 2; w <= 12; ++w) {
    if (w == 8) continue;
    const auto m = encode_poly(default_field_spec(2, w).modulus, 2);
    CHECK(gf2_irreducible(m));
    for (std::uint64_t smaller = (std::uint64_t{1} << w); smaller < m; ++smaller) {
      REQUIRE_FALSE(gf2_irreducible(smaller));
    }
  }
}

TEST_CASE("multiplication matches hand reduction in F_8") {
  auto f8 = Field::make({2, 3, {1, 1, 0, 1}});
  CHECK(f8->mul(Elem{2}, Elem{4}) == Elem{3});
  CHECK(oracle::naive_mul(f8->spec(), 2, 4) == 3);
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(f8->mul(Elem{a}, f8->one()) == Elem{a});
    CHECK(f8->add(Elem{a}, Elem{a}) == f8->zero());
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (const auto& f : small_fields()) {
    CAPTURE(f->q());
    const auto q = static_cast<std::uint32_t>(f->q());
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const Elem x{a}, y{b};
        REQUIRE(f->mul(x, y).value == oracle::naive_mul(f->spec(), a, b));
        REQUIRE(f->add(x, y).value == oracle::naive_add(f->spec(), a, b));
        REQUIRE(f->add(x, y) == f->add(y, x));
        REQUIRE(f->mul(x, y) == f->mul(y, x));
        REQUIRE(f->sub(f->add(x, y), y) == x);
        if (q <= 16) {
          for (std::uint32_t c = 0; c < q; ++c) {
            const Elem z{c};
            REQUIRE(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
            REQUIRE(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
            REQUIRE(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
          }
        }
      }
    }
  }
}

TEST_CASE("inverses and Fermat exhaustively up to q = 256") {
  auto fields = small_fields();
  fields.push_back(Field::make_default(2, 8));
  fields.push_back(Field::make_default(3, 5));
  for (const auto& f : fields) {
    CAPTURE(f->q());
    for (std::uint64_t a = 1; a < f->q(); ++a) {
      const Elem x{static_cast<std::uint32_t>(a)};
      REQUIRE(f->mul(x, f->inv(x)) == f->one());
      REQUIRE(f->pow(x, static_cast<std::int64_t>(f->q() - 1)) == f->one());
      REQUIRE(f->pow(x, -1) == f->inv(x));
    }
    CHECK_THROWS_AS(f->inv(f->zero()), Error);
  }
}

TEST_CASE("large fields fall back to polynomial arithmetic") {
  std::mt19937_64 rng(11);
  for (auto [p, w] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 17}, {2, 24}, {3, 11}, {65537, 1}}) {
    auto f = Field::make_default(p, w);
    CAPTURE(f->q());
    CHECK_FALSE(f->has_tables());
    for (int t = 0; t < 300; ++t) {
      const Elem a = oracle::random_nonzero(*f, rng);
      const Elem b = oracle::random_elem(*f, rng);
      const Elem c = oracle::random_elem(*f, rng);
      REQUIRE(f->mul(a, b).value == oracle::naive_mul(f->spec(), a.value, b.value));
      REQUIRE(f->mul(a, f->inv(a)) == f->one());
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
    CHECK(f->order(f->primitive()) == f->q() - 1);
  }
}

TEST_CASE("table and polynomial paths agree") {
  std::mt19937_64 rng(5);
  for (auto [p, w] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 16}, {3, 10}, {251, 2}}) {
    auto f = Field::make_default(p, w);
    REQUIRE(f->has_tables());
    for (int t = 0; t < 2000; ++t) {
      const Elem a = oracle::random_elem(*f, rng), b = oracle::random_elem(*f, rng);
      REQUIRE(f->mul(a, b).value == oracle::naive_mul(f->spec(), a.value, b.value));
    }
  }
}

TEST_CASE("order") {
  auto f256 = Field::make_default(2, 8);
  CHECK(f256->order(f256->one()) == 1);
  // Brute-force power iteration.
  std::uint64_t d = 1;
  for (Elem x = Elem{2}; x != f256->one(); x = f256->mul(x, Elem{2})) ++d;
  CHECK(d == 255);
  CHECK(f256->order(Elem{2}) == 255);

  auto f5 = Field::make_default(5, 1);
  CHECK(f5->order(Elem{4}) == 2);
  CHECK_THROWS_AS(f5->order(f5->zero()), Error);

  for (const auto& f : small_fields()) {
    for (std::uint64_t a = 1; a < f->q(); ++a) {
      const Elem x{static_cast<std::uint32_t>(a)};
      std::uint64_t brute = 1;
      for (Elem y = x; y != f->one(); y = f->mul(y, x)) ++brute;
      REQUIRE(f->order(x) == brute);
      REQUIRE((f->q() - 1) % brute == 0);
    }
  }
}

TEST_CASE("primitive element is the smallest of full order") {
  CHECK(Field::make_default(2, 1)->primitive() == Elem{1});
  CHECK(Field::make_default(5, 1)->primitive() == Elem{2});
  CHECK(Field::make_default(2, 8)->primitive() == Elem{2});
  for (const auto& f : small_fields()) {
    const Elem g = f->primitive();
    CHECK(f->order(g) == f->q() - 1);
    for (std::uint32_t a = 1; a < g.value; ++a) CHECK(f->order(Elem{a}) < f->q() - 1);
    CHECK(Field::make(f->spec())->primitive() == g);
  }
}

TEST_CASE("frobenius") {
  auto f4 = Field::make_default(2, 2);
  CHECK(f4->frobenius(Elem{2}, 0) == Elem{2});
  CHECK(f4->frobenius(Elem{2}, 1) == Elem{3});
  CHECK_THROWS_AS(f4->frobenius(Elem{2}, 2), Error);

  std::mt19937_64 rng(3);
  auto f256 = Field::make_default(2, 8);
  for (int t = 0; t < 200; ++t) {
    const Elem a = oracle::random_nonzero(*f256, rng);
    const Elem b = oracle::random_elem(*f256, rng);
    const auto e = static_cast<std::uint32_t>(t % 8);
    CHECK(f256->order(f256->frobenius(a, e)) == f256->order(a));
    CHECK(f256->frobenius(f256->add(a, b), e) == f256->add(f256->frobenius(a, e), f256->frobenius(b, e)));
    CHECK(f256->frobenius(f256->mul(a, b), e) == f256->mul(f256->frobenius(a, e), f256->frobenius(b, e)));
  }
}

TEST_CASE("frobenius is a bijection with p^gcd(e,w) fixed points") {
  auto fields = small_fields();
  fields.push_back(Field::make_default(2, 8));
  fields.push_back(Field::make_default(3, 4));
  for (const auto& f : fields) {
    for (std::uint32_t e = 0; e < f->w(); ++e) {
      std::set<std::uint32_t> image;
      std::uint64_t fixed = 0;
      for (std::uint64_t a = 0; a < f->q(); ++a) {
        const Elem x{static_cast<std::uint32_t>(a)};
        const Elem y = f->frobenius(x, e);
        image.insert(y.value);
        if (y == x) ++fixed;
      }
      CHECK(image.size() == f->q());
      CHECK(fixed == ipow(f->p(), f->fixed_subfield_degree(e)));
    }
  }
}

TEST_CASE("fixed subfield degree") {
  auto f256 = Field::make_default(2, 8);
  CHECK(f256->fixed_subfield_degree(1) == 1);
  CHECK(f256->fixed_subfield_degree(4) == 4);
  CHECK(f256->fixed_subfield_degree(0) == 8);
  CHECK_THROWS_AS(f256->fixed_subfield_degree(8), Error);
  std::uint64_t fixed_by_squaring = 0;
  for (std::uint32_t a = 0; a < 256; ++a) fixed_by_squaring += f256->mul(Elem{a}, Elem{a}) == Elem{a};
  CHECK(fixed_by_squaring == 2);
}

TEST_CASE("element parsing") {
  auto f256 = Field::make_default(2, 8);
  CHECK(f256->parse("0x1d") == Elem{29});
  CHECK(f256->parse("29") == Elem{29});
  CHECK_THROWS_AS(f256->parse("256"), Error);
  CHECK_THROWS_AS(f256->parse("abc"), Error);
  auto f9 = Field::make_default(3, 2);
  CHECK_THROWS_AS(f9->parse("0x3"), Error);
  CHECK_THROWS_AS(f9->elem(9), Error);
}
