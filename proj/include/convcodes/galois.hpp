#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace convcodes {

/// Description of F_{p^w}. `modulus` holds the coefficients of a monic
/// degree-w polynomial over F_p, constant term first (so modulus.back() == 1).
/// It is ignored, and may be empty, for prime fields.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t w = 1;
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// Default spec for F_{p^w}: 0x11D for F_256, otherwise the monic irreducible
/// of smallest base-p encoding.
FieldSpec default_field_spec(std::uint32_t p, std::uint32_t w);

/// Base-p packing of a coefficient list (constant term in the lowest digit).
std::uint64_t encode_poly(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);
std::vector<std::uint32_t> decode_poly(std::uint64_t packed, std::uint32_t p, std::uint32_t len);

/// A field element: polynomial coefficients packed base p into [0, q).
struct Elem {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Elem&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable arithmetic context for one finite field. Log/antilog tables
/// are built eagerly for q <= 2^16; larger fields use polynomial arithmetic.
class Field {
 public:
  static constexpr std::uint64_t kTableLimit = 1u << 16;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

  /// Throws NotPrime, BadFieldSpec or ReducibleModulus.
  static FieldPtr make(const FieldSpec& spec);
  static FieldPtr make_default(std::uint32_t p, std::uint32_t w);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t w() const noexcept { return spec_.w; }
  std::uint64_t q() const noexcept { return q_; }
  bool has_tables() const noexcept { return !log_.empty(); }
  bool same_as(const Field& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Checked conversion from an integer encoding; throws OutOfRange.
  Elem elem(std::uint64_t value) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Square-and-multiply; negative exponents need a nonzero base.
  Elem pow(Elem a, std::int64_t e) const;

  /// Multiplicative order via the factorization of q-1. Throws ZeroElement.
  std::uint64_t order(Elem a) const;
  /// Smallest-encoded element of order q-1.
  Elem primitive() const noexcept { return primitive_; }

  /// a^{p^e} for 0 <= e < w. Throws BadExponent.
  Elem frobenius(Elem a, std::uint32_t e) const;
  /// Degree over F_p of the fixed field of x -> x^{p^e}, i.e. gcd(e, w).
  std::uint32_t fixed_subfield_degree(std::uint32_t e) const;

  /// Image of c mod p in the prime subfield.
  Elem from_prime_subfield(std::uint64_t c) const noexcept { return Elem{static_cast<std::uint32_t>(c % spec_.p)}; }

  std::string render(Elem a) const;
  /// Decimal, or 0x-prefixed hex when p == 2. Throws OutOfRange.
  Elem parse(std::string_view text) const;

 private:
  explicit Field(FieldSpec spec);

  Elem poly_mul(Elem a, Elem b) const noexcept;
  Elem slow_pow(Elem a, std::uint64_t e) const noexcept;
  void build_tables();

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  std::uint64_t modulus_packed_ = 0;  // low w digits, p == 2 only
  std::vector<std::uint64_t> order_factors_;
  Elem primitive_{1};
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
};

/// Irreducibility over F_p by trial division. Returns an empty vector when
/// irreducible, otherwise a monic nontrivial factor (constant term first).
std::vector<std::uint32_t> find_factor(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace convcodes
