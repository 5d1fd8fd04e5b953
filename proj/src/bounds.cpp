#include "convcodes/bounds.hpp"

#include "convcodes/combinatorics.hpp"
#include "convcodes/error.hpp"
#include "convcodes/numtheory.hpp"

namespace convcodes {
namespace {

BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

FeasibilityVerdict divisor_bound_check(std::uint64_t q, std::uint64_t k, std::uint64_t r) {
  if (!as_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q));
  FeasibilityVerdict verdict;
  for (auto m : divisors(q - 1)) {
    if (m >= k) break;
    const std::uint64_t need = r * m + 1;
    if (q < need) verdict.violations.push_back({"divisor", m, need});
  }
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

FeasibilityVerdict char2_bound_check(std::uint64_t q, std::uint64_t k, std::uint64_t r) {
  const auto pp = as_prime_power(q);
  if (!pp || pp->p != 2) throw Error(ErrorCode::NotPowerOfTwo, std::to_string(q));
  FeasibilityVerdict verdict;
  if (k > r && (r >= 64 || q < (std::uint64_t{1} << r))) {
    verdict.violations.push_back({"char2", r, r >= 64 ? 0 : std::uint64_t{1} << r});
  }
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

FeasibilityVerdict lower_bound_check(std::uint64_t q, std::uint64_t k, std::uint64_t r) {
  FeasibilityVerdict verdict = divisor_bound_check(q, k, r);
  if (q % 2 == 0) {
    auto extra = char2_bound_check(q, k, r);
    verdict.violations.insert(verdict.violations.end(), extra.violations.begin(), extra.violations.end());
  }
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

std::optional<std::vector<std::size_t>> zero_sum_subset(const Field& field, std::span<const Elem> values) {
  if (field.p() != 2) throw Error(ErrorCode::NotPowerOfTwo, "zero-sum subsets need characteristic 2");
  const std::size_t n = values.size();
  for (std::size_t size = 1; size <= n; ++size) {
    auto subset = first_combination(size);
    do {
      std::uint32_t sum = 0;
      for (auto i : subset) sum ^= values[i - 1].value;
      if (sum == 0) return subset;
    } while (next_combination(subset, n));
  }
  return std::nullopt;
}

Selector char2_singular_witness(const Field& field, std::span<const Elem> xi, std::size_t k) {
  auto subset = zero_sum_subset(field, xi);
  if (!subset) throw Error(ErrorCode::NoZeroSumSubset, "no subset of the scalars sums to zero");
  const std::size_t ell = subset->size();
  if (ell + 1 > k) {
    throw Error(ErrorCode::TooFewRows,
                "zero-sum subset of size " + std::to_string(ell) + " needs k >= " + std::to_string(ell + 1));
  }
  Selector sel;
  for (std::size_t i = 1; i <= ell + 1; ++i) {
    if (i != ell) sel.rows.push_back(i);
  }
  sel.cols = std::move(*subset);
  return sel;
}

BigInt existence_threshold(std::uint64_t k, std::uint64_t r) {
  BigInt sum = 0;
  for (std::uint64_t ell = 2; ell <= r; ++ell) {
    if (k < ell) break;
    sum += big_binomial(r, ell) * big_binomial(k - 2, ell - 2);
  }
  return 1 + big_binomial(k, 2) * sum;
}

}  // namespace convcodes
