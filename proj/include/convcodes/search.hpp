#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convcodes/bounds.hpp"
#include "convcodes/galois.hpp"

namespace convcodes {

inline constexpr std::uint64_t kDefaultDeterminantBudget = 10'000'000;

struct SearchReport {
  FieldSpec field;
  std::size_t k = 0;
  std::size_t r = 0;
  bool exists = false;
  /// Sorted scalar set; lexicographically least for exhaustive searches.
  std::optional<std::vector<Elem>> witness;
  std::uint64_t sets_examined = 0;
  std::uint64_t determinants = 0;
  std::optional<std::uint64_t> seed;
};

/// Walks all r-subsets of F_q^x in lexicographic order of their encodings
/// and stops at the first whose k x r Vandermonde matrix is super-regular.
/// Throws BudgetExceeded once `budget` determinants have been spent.
SearchReport exhaustive_search(const FieldPtr& field, std::size_t k, std::size_t r,
                               std::uint64_t budget = kDefaultDeterminantBudget);

/// Draws up to `trials` uniformly random r-subsets of F_q^x, stopping at the
/// first super-regular one. Deterministic in `seed`.
SearchReport random_search(const FieldPtr& field, std::size_t k, std::size_t r, std::uint64_t trials,
                           std::uint64_t seed);

enum class Existence { Exists, Absent, Unknown };

struct FrontierRow {
  std::uint64_t q = 0;
  Existence status = Existence::Unknown;
  std::optional<std::vector<Elem>> witness;
  FeasibilityVerdict lower_bounds;
};

struct Frontier {
  std::size_t k = 0;
  std::size_t r = 0;
  BigInt threshold;
  std::vector<FrontierRow> rows;
  std::optional<std::uint64_t> first_exists;
  /// Rows contradicting a bound: existence where a lower bound forbids it,
  /// or absence above the existence threshold. Empty when consistent.
  std::vector<std::string> inconsistencies;
};

/// Exhaustive search per field (ordered by q), cross-checked against the
/// lower bounds and the existence threshold.
Frontier empirical_min_q(std::size_t k, std::size_t r, std::span<const FieldSpec> family,
                         std::uint64_t budget = kDefaultDeterminantBudget);

/// Default-modulus specs for every prime power in [lo, hi].
std::vector<FieldSpec> prime_power_family(std::uint64_t lo, std::uint64_t hi);

}  // namespace convcodes
