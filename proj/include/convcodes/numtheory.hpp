#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace convcodes {

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
  std::uint32_t p;
  std::uint32_t w;
};

std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Prime powers in [lo, hi], ascending.
std::vector<std::uint64_t> prime_powers_between(std::uint64_t lo, std::uint64_t hi);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace convcodes
