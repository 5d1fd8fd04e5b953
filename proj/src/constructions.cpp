#include "convcodes/constructions.hpp"

#include <numeric>

#include "convcodes/error.hpp"

namespace convcodes {

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::ConsecutivePowers: return "consecutive";
    case Variant::CoprimeExponent: return "coprime";
    case Variant::Automorphism: return "automorphism";
  }
  return "unknown";
}

std::string_view guarantee_name(Guarantee g) noexcept {
  switch (g) {
    case Guarantee::Unverified: return "unverified";
    case Guarantee::GeneralField: return "proven-general-field";
    case Guarantee::Char2: return "proven-char2";
  }
  return "unknown";
}

std::vector<Elem> consecutive_power_scalars(const Field& field, std::size_t r) {
  if (r >= field.q()) {
    throw Error(ErrorCode::TooManyScalars,
                std::to_string(r) + " distinct nonzero scalars requested from F_" + std::to_string(field.q()));
  }
  std::vector<Elem> xi;
  xi.reserve(r);
  Elem power = field.one();
  for (std::size_t i = 0; i < r; ++i) {
    xi.push_back(power);
    power = field.mul(power, field.primitive());
  }
  return xi;
}

std::vector<Elem> coprime_exponent_scalars(const Field& field, std::uint64_t e) {
  const std::uint64_t n = field.q() - 1;
  if (e < 2 || e > n) {
    throw Error(ErrorCode::CoprimalityViolation, "exponent " + std::to_string(e) + " outside [2, q-1]");
  }
  if (std::gcd(e, n) != 1) {
    throw Error(ErrorCode::CoprimalityViolation,
                "gcd(e, q-1) = " + std::to_string(std::gcd(e, n)) + " for e = " + std::to_string(e));
  }
  if (std::gcd(e - 1, n) != 1) {
    throw Error(ErrorCode::CoprimalityViolation,
                "gcd(e-1, q-1) = " + std::to_string(std::gcd(e - 1, n)) + " for e = " + std::to_string(e));
  }
  const Elem theta = field.primitive();
  return {field.one(), theta, field.pow(theta, static_cast<std::int64_t>(e))};
}

std::vector<Elem> automorphism_scalars(const Field& field, std::uint32_t e) {
  if (e == 0) throw Error(ErrorCode::TrivialAutomorphism, "e = 0 is the identity map");
  const std::uint32_t fixed = field.fixed_subfield_degree(e);
  if (fixed != 1) {
    throw Error(ErrorCode::FixedFieldTooLarge, "x -> x^(p^" + std::to_string(e) + ") fixes F_(p^" +
                                                   std::to_string(fixed) + ")");
  }
  const Elem theta = field.primitive();
  return {field.one(), theta, field.frobenius(theta, e)};
}

Construction build_parity(const Recipe& recipe) {
  auto field = Field::make(recipe.field);
  std::vector<Elem> xi;
  Guarantee guarantee = Guarantee::Unverified;
  switch (recipe.variant) {
    case Variant::ConsecutivePowers:
      xi = consecutive_power_scalars(*field, recipe.r);
      break;
    case Variant::CoprimeExponent:
      xi = coprime_exponent_scalars(*field, recipe.e);
      break;
    case Variant::Automorphism:
      if (recipe.e >= field->w()) {
        throw Error(ErrorCode::BadExponent, "automorphism exponent must be below w");
      }
      xi = automorphism_scalars(*field, static_cast<std::uint32_t>(recipe.e));
      if (field->p() == 2) {
        if (recipe.k >= field->q()) {
          throw Error(ErrorCode::KTooLarge,
                      "k = " + std::to_string(recipe.k) + " must be below q = " + std::to_string(field->q()));
        }
        if (recipe.r <= 3) guarantee = Guarantee::Char2;
      } else if (recipe.k <= field->w() && recipe.r <= 3) {
        guarantee = Guarantee::GeneralField;
      }
      break;
  }
  if (recipe.variant != Variant::ConsecutivePowers) {
    if (recipe.r > xi.size()) {
      throw Error(ErrorCode::TooManyScalars, std::string(variant_name(recipe.variant)) + " recipes supply 3 scalars");
    }
    xi.resize(recipe.r);
  }
  Matrix parity = vandermonde(field, recipe.k, xi);
  return Construction{field, std::move(xi), std::move(parity), guarantee};
}

std::optional<TrinomialWitness> trinomial_singularity_scan(const Field& field, std::size_t k, Elem theta,
                                                           Elem sigma_theta) {
  if (k >= field.q()) throw Error(ErrorCode::PreconditionViolated, "k must be below q");
  if (theta.value == 0 || field.order(theta) != field.q() - 1) {
    throw Error(ErrorCode::PreconditionViolated, "theta is not primitive");
  }
  bool valid_sigma = false;
  for (std::uint32_t e = 1; e < field.w() && !valid_sigma; ++e) {
    valid_sigma = std::gcd(e, field.w()) == 1 && field.frobenius(theta, e) == sigma_theta;
  }
  if (!valid_sigma) {
    throw Error(ErrorCode::PreconditionViolated, "sigma(theta) is not the image of theta under an automorphism "
                                                 "with fixed field F_p");
  }

  std::vector<Elem> theta_pow(k), sigma_pow(k);
  for (std::size_t i = 0; i < k; ++i) {
    theta_pow[i] = field.pow(theta, static_cast<std::int64_t>(i));
    sigma_pow[i] = field.pow(sigma_theta, static_cast<std::int64_t>(i));
  }
  const std::uint32_t p = field.p();
  for (std::size_t e1 = 1; e1 + 1 < k; ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < k; ++e2) {
      for (std::uint32_t a = 1; a < p; ++a) {
        // f(1) = c1 + c2 + 1 = 0 pins c2 = -(c1 + 1) in F_p.
        const std::uint32_t b = (2 * p - a - 1) % p;
        if (b == 0) continue;
        const Elem c1 = field.from_prime_subfield(a);
        const Elem c2 = field.from_prime_subfield(b);
        const Elem at_theta = field.add(field.add(c1, field.mul(c2, theta_pow[e1])), theta_pow[e2]);
        if (at_theta.value != 0) continue;
        const Elem at_sigma = field.add(field.add(c1, field.mul(c2, sigma_pow[e1])), sigma_pow[e2]);
        if (at_sigma.value == 0) return TrinomialWitness{e1, e2, c1, c2};
      }
    }
  }
  return std::nullopt;
}

}  // namespace convcodes
