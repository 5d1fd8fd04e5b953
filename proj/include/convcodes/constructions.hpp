#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "convcodes/galois.hpp"
#include "convcodes/matrix.hpp"

namespace convcodes {

enum class Variant {
  ConsecutivePowers,  // (1, theta, ..., theta^{r-1})
  CoprimeExponent,    // (1, theta, theta^e) with e, e-1 coprime to q-1
  Automorphism,       // (1, theta, theta^{p^e}) with gcd(e, w) = 1
};

enum class Guarantee {
  Unverified,
  GeneralField,  // automorphism scalars, r <= 3, k <= w
  Char2,         // automorphism scalars, p = 2, r <= 3, k < q
};

std::string_view variant_name(Variant v) noexcept;
std::string_view guarantee_name(Guarantee g) noexcept;

struct Recipe {
  Variant variant = Variant::Automorphism;
  std::uint64_t e = 1;
  FieldSpec field;
  std::size_t k = 1;
  std::size_t r = 3;
};

/// Throws TooManyScalars when r >= q.
std::vector<Elem> consecutive_power_scalars(const Field& field, std::size_t r);

/// Throws CoprimalityViolation when e is out of [2, q-1] or e or e-1
/// shares a factor with q-1.
std::vector<Elem> coprime_exponent_scalars(const Field& field, std::uint64_t e);

/// Throws TrivialAutomorphism (e = 0), BadExponent (e >= w) or
/// FixedFieldTooLarge (gcd(e, w) > 1).
std::vector<Elem> automorphism_scalars(const Field& field, std::uint32_t e);

struct Construction {
  FieldPtr field;
  std::vector<Elem> scalars;
  Matrix parity;
  Guarantee guarantee = Guarantee::Unverified;
};

/// Materializes V_k(scalars) for the recipe. Requests with r < 3 for the
/// three-scalar variants use a prefix of the three scalars.
Construction build_parity(const Recipe& recipe);

struct TrinomialWitness {
  std::size_t e1;
  std::size_t e2;
  Elem c1;
  Elem c2;

  bool operator==(const TrinomialWitness&) const = default;
};

/// Searches 1 <= e1 < e2 <= k-1 and c1, c2 in F_p^x for c1 + c2 x^e1 + x^e2
/// vanishing at 1, theta and sigma_theta. A result exists iff V_k(1, theta,
/// sigma_theta) has a singular 3x3 submatrix. Throws PreconditionViolated
/// unless theta is primitive, sigma_theta is the image of theta under an
/// automorphism fixing only F_p, and k < q.
std::optional<TrinomialWitness> trinomial_singularity_scan(const Field& field, std::size_t k, Elem theta,
                                                           Elem sigma_theta);

}  // namespace convcodes
