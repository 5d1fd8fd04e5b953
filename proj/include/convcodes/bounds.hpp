#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convcodes/galois.hpp"
#include "convcodes/matrix.hpp"

namespace convcodes {

using BigInt = boost::multiprecision::cpp_int;

struct Violation {
  std::string rule;            // "divisor" or "char2"
  std::uint64_t parameter;     // offending divisor m, or r for the char-2 rule
  std::uint64_t required_q;    // smallest field size the rule would accept
};

struct FeasibilityVerdict {
  bool feasible = true;
  std::vector<Violation> violations;
  std::optional<Selector> witness;
};

/// Necessary condition over any F_q: every divisor m of q-1 with m < k needs
/// q >= r*m + 1. All failing divisors are reported. Throws NotPrimePower.
FeasibilityVerdict divisor_bound_check(std::uint64_t q, std::uint64_t k, std::uint64_t r);

/// Necessary condition over F_{2^w} for distinct nonzero scalars: when
/// k > r, q >= 2^r. Throws NotPowerOfTwo.
FeasibilityVerdict char2_bound_check(std::uint64_t q, std::uint64_t k, std::uint64_t r);

/// Both lower bounds that apply to q (the char-2 rule only when q is even).
FeasibilityVerdict lower_bound_check(std::uint64_t q, std::uint64_t k, std::uint64_t r);

/// Smallest nonempty subset (size, then lexicographic; 1-indexed) of `values`
/// summing to zero in a characteristic-2 field. Throws NotPowerOfTwo.
std::optional<std::vector<std::size_t>> zero_sum_subset(const Field& field, std::span<const Elem> values);

/// Singular square selector of V_k(xi) built from a zero-sum subset I of xi:
/// rows [|I|+1] \ {|I|}, columns I. Throws NotPowerOfTwo, NoZeroSumSubset,
/// TooFewRows.
Selector char2_singular_witness(const Field& field, std::span<const Elem> xi, std::size_t k);

/// 1 + C(k,2) * sum_{l=2}^{r} C(r,l) C(k-2,l-2). Any prime power strictly
/// above this admits a k x r super-regular Vandermonde matrix.
BigInt existence_threshold(std::uint64_t k, std::uint64_t r);

}  // namespace convcodes
