#include <doctest.h>

#include "convcodes/bounds.hpp"
#include "convcodes/combinatorics.hpp"
#include "convcodes/numtheory.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace convcodes;

TEST_CASE("divisor bound") {
  auto v = divisor_bound_check(256, 86, 4);
  CHECK_FALSE(v.feasible);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].parameter == 85);
  CHECK(v.violations[0].required_q == 341);

  v = divisor_bound_check(256, 52, 6);
  CHECK_FALSE(v.feasible);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].parameter == 51);
  CHECK(v.violations[0].required_q == 307);

  for (std::uint64_t q : {2, 7, 256, 257}) CHECK(divisor_bound_check(q, 1, 5).feasible);

  // q = 7, k = 4, r = 3: m = 3 needs q >= 10, m = 2 needs q >= 7.
  v = divisor_bound_check(7, 4, 3);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].parameter == 3);
  CHECK(v.violations[0].required_q == 10);

  // Every failing divisor is reported: q = 13, k = 5, r = 5 fails m = 3, 4.
  v = divisor_bound_check(13, 5, 5);
  REQUIRE(v.violations.size() == 2);
  CHECK(v.violations[0].parameter == 3);
  CHECK(v.violations[1].parameter == 4);

  CHECK(thrown_code([] { divisor_bound_check(12, 3, 2); }) == ErrorCode::NotPrimePower);
}

TEST_CASE("characteristic-2 bound") {
  CHECK_FALSE(char2_bound_check(256, 10, 9).feasible);
  CHECK(char2_bound_check(256, 9, 9).feasible);
  auto v = char2_bound_check(8, 5, 4);
  CHECK_FALSE(v.feasible);
  CHECK(v.violations.at(0).required_q == 16);
  CHECK(char2_bound_check(16, 5, 4).feasible);
  CHECK(thrown_code([] { char2_bound_check(9, 5, 4); }) == ErrorCode::NotPowerOfTwo);
  CHECK(lower_bound_check(9, 5, 4).violations.size() == divisor_bound_check(9, 5, 4).violations.size());
}

TEST_CASE("zero-sum subsets") {
  auto f4 = Field::make_default(2, 2);
  std::vector<Elem> with_zero{Elem{3}, Elem{0}, Elem{1}};
  CHECK(zero_sum_subset(*f4, with_zero) == std::vector<std::size_t>{2});

  std::vector<Elem> all{Elem{1}, Elem{2}, Elem{3}};
  CHECK(zero_sum_subset(*f4, all) == std::vector<std::size_t>{1, 2, 3});

  auto f8 = Field::make_default(2, 3);
  std::vector<Elem> basis{Elem{1}, Elem{2}};
  CHECK_FALSE(zero_sum_subset(*f8, basis).has_value());

  auto f5 = Field::make_default(5, 1);
  CHECK(thrown_code([&] { zero_sum_subset(*f5, basis); }) == ErrorCode::NotPowerOfTwo);
}

TEST_CASE("zero-sum subsets always exist beyond the dimension") {
  auto f8 = Field::make_default(2, 3);
  for (std::size_t r = 1; r <= 7; ++r) {
    auto set = first_combination(r, 0);
    do {
      std::vector<Elem> values;
      for (auto v : set) values.push_back(Elem{static_cast<std::uint32_t>(v)});
      auto subset = zero_sum_subset(*f8, values);
      if (r > 3) REQUIRE(subset.has_value());
      if (subset) {
        REQUIRE_FALSE(subset->empty());
        std::uint32_t sum = 0;
        for (auto i : *subset) sum ^= values[i - 1].value;
        REQUIRE(sum == 0);
      }
    } while (next_combination(set, 7));
  }
}

TEST_CASE("characteristic-2 singular witness") {
  auto f4 = Field::make_default(2, 2);
  std::vector<Elem> xi{Elem{1}, Elem{2}, Elem{3}};
  auto sel = char2_singular_witness(*f4, xi, 4);
  CHECK(sel.rows == std::vector<std::size_t>{1, 2, 4});
  CHECK(sel.cols == std::vector<std::size_t>{1, 2, 3});
  CHECK(oracle::laplace_det(vandermonde(f4, 4, xi).submatrix(sel)).value == 0);

  CHECK(thrown_code([&] { char2_singular_witness(*f4, xi, 3); }) == ErrorCode::TooFewRows);
  std::vector<Elem> independent{Elem{1}, Elem{2}};
  CHECK(thrown_code([&] { char2_singular_witness(*f4, independent, 4); }) == ErrorCode::NoZeroSumSubset);

  // Basis of F_8 plus the sum of the basis.
  auto f8 = Field::make_default(2, 3);
  std::vector<Elem> spanning{Elem{1}, Elem{2}, Elem{4}, Elem{7}};
  auto sel8 = char2_singular_witness(*f8, spanning, 5);
  CHECK(oracle::laplace_det(vandermonde(f8, 5, spanning).submatrix(sel8)).value == 0);
}

TEST_CASE("characteristic-2 witness is singular for every scalar set") {
  for (std::uint32_t w = 2; w <= 4; ++w) {
    auto f = Field::make_default(2, w);
    const std::size_t nonzero = f->q() - 1;
    for (std::size_t r = w + 1; r <= std::min<std::size_t>(nonzero, 6); ++r) {
      auto set = first_combination(r);
      do {
        std::vector<Elem> xi;
        for (auto v : set) xi.push_back(Elem{static_cast<std::uint32_t>(v)});
        auto subset = zero_sum_subset(*f, xi);
        REQUIRE(subset.has_value());
        const std::size_t k = subset->size() + 1;
        auto sel = char2_singular_witness(*f, xi, k);
        REQUIRE(determinant(vandermonde(f, k, xi).submatrix(sel)).value == 0);
      } while (next_combination(set, nonzero));
    }
  }
}

TEST_CASE("existence threshold") {
  CHECK(existence_threshold(7, 1) == 1);
  CHECK(existence_threshold(4, 2) == 7);
  CHECK(existence_threshold(4, 3) == 31);
  CHECK(existence_threshold(3, 2) == 4);
  CHECK(existence_threshold(5, 2) == 11);
  CHECK(existence_threshold(6, 2) == 16);
  // Large arguments stay exact.
  CHECK(existence_threshold(1000, 40) > BigInt(std::numeric_limits<std::uint64_t>::max()));

  // Direct evaluation with 64-bit binomials at small sizes, plus monotonicity.
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (std::uint64_t r = 1; r <= 12; ++r) {
      std::uint64_t sum = 0;
      for (std::uint64_t l = 2; l <= r && l <= k; ++l) sum += binomial(r, l) * binomial(k - 2, l - 2);
      CHECK(existence_threshold(k, r) == 1 + binomial(k, 2) * sum);
      CHECK(existence_threshold(k + 1, r) >= existence_threshold(k, r));
      CHECK(existence_threshold(k, r + 1) >= existence_threshold(k, r));
    }
  }
}
