#include "convcodes/galois.hpp"

#include <charconv>
#include <numeric>

#include "convcodes/error.hpp"
#include "convcodes/numtheory.hpp"

namespace convcodes {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_rem(Poly a, const Poly& monic, std::uint32_t p) {
  const std::size_t d = monic.size() - 1;
  trim(a);
  while (a.size() > d) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t j = 0; j <= d; ++j) {
      const std::uint64_t sub = lead * monic[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::string poly_to_string(const Poly& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeffs[i] != 1 || i == 0) out += std::to_string(coeffs[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::uint64_t encode_poly(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  std::uint64_t packed = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) packed = packed * p + coeffs[i];
  return packed;
}

std::vector<std::uint32_t> decode_poly(std::uint64_t packed, std::uint32_t p, std::uint32_t len) {
  std::vector<std::uint32_t> coeffs(len);
  for (auto& c : coeffs) {
    c = static_cast<std::uint32_t>(packed % p);
    packed /= p;
  }
  return coeffs;
}

std::vector<std::uint32_t> find_factor(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  const std::size_t deg = f.empty() ? 0 : f.size() - 1;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly g = decode_poly(lower, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return g;
    }
  }
  return {};
}

FieldSpec default_field_spec(std::uint32_t p, std::uint32_t w) {
  if (p == 2 && w == 8) return FieldSpec{2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}};
  if (w <= 1) return FieldSpec{p, w, {}};
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (ipow(p, w) > Field::kMaxOrder) {
    throw Error(ErrorCode::BadFieldSpec, "field order exceeds 2^32");
  }
  const std::uint64_t count = ipow(p, w);
  for (std::uint64_t lower = 1; lower < count; ++lower) {
    Poly m = decode_poly(lower, p, w);
    m.push_back(1);
    if (find_factor(m, p).empty()) return FieldSpec{p, w, m};
  }
  throw Error(ErrorCode::BadFieldSpec, "no irreducible polynomial found");
}

FieldPtr Field::make_default(std::uint32_t p, std::uint32_t w) {
  return make(default_field_spec(p, w));
}

FieldPtr Field::make(const FieldSpec& raw) {
  FieldSpec spec = raw;
  if (!is_prime(spec.p)) throw Error(ErrorCode::NotPrime, std::to_string(spec.p));
  if (spec.w < 1) throw Error(ErrorCode::BadFieldSpec, "extension degree must be >= 1");
  if (spec.w >= 33 || ipow(spec.p, spec.w) > kMaxOrder) {
    throw Error(ErrorCode::BadFieldSpec, "field order exceeds 2^32");
  }
  if (spec.w == 1) {
    spec.modulus.clear();
  } else {
    if (spec.modulus.size() != spec.w + 1) {
      throw Error(ErrorCode::BadFieldSpec, "modulus must have w+1 coefficients");
    }
    for (auto c : spec.modulus) {
      if (c >= spec.p) throw Error(ErrorCode::BadFieldSpec, "modulus coefficient out of range");
    }
    if (spec.modulus.back() != 1) throw Error(ErrorCode::BadFieldSpec, "modulus must be monic");
    if (auto factor = find_factor(spec.modulus, spec.p); !factor.empty()) {
      throw Error(ErrorCode::ReducibleModulus,
                  poly_to_string(spec.modulus) + " has factor " + poly_to_string(factor));
    }
  }
  return FieldPtr(new Field(std::move(spec)));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  q_ = ipow(spec_.p, spec_.w);
  if (spec_.p == 2 && spec_.w > 1) {
    modulus_packed_ = encode_poly(spec_.modulus, 2) & (q_ - 1);
  }
  order_factors_ = prime_factors(q_ - 1);
  for (std::uint64_t c = 1; c < q_; ++c) {
    const Elem a{static_cast<std::uint32_t>(c)};
    bool full = true;
    for (auto f : order_factors_) {
      if (slow_pow(a, (q_ - 1) / f) == one()) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive_ = a;
      break;
    }
  }
  if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  Elem x = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x.value;
    log_[x.value] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, primitive_);
  }
}

Elem Field::elem(std::uint64_t value) const {
  if (value >= q_) {
    throw Error(ErrorCode::OutOfRange,
                std::to_string(value) + " is not an element of F_" + std::to_string(q_));
  }
  return Elem{static_cast<std::uint32_t>(value)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (p == 2) return Elem{a.value ^ b.value};
  if (spec_.w == 1) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p)};
  std::uint64_t x = a.value, y = b.value, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.w; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::neg(Elem a) const noexcept {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a;
  if (spec_.w == 1) return Elem{a.value == 0 ? 0 : p - a.value};
  std::uint64_t x = a.value, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.w; ++i) {
    out += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a.value == 0 || b.value == 0) return zero();
  if (!log_.empty()) return Elem{exp_[log_[a.value] + log_[b.value]]};
  return poly_mul(a, b);
}

Elem Field::poly_mul(Elem a, Elem b) const noexcept {
  const std::uint32_t p = spec_.p;
  const std::uint32_t w = spec_.w;
  if (w == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p)};
  if (p == 2) {
    const std::uint64_t full = q_ | modulus_packed_;
    std::uint64_t acc = 0;
    for (std::uint32_t bit = w; bit-- > 0;) {
      acc <<= 1;
      if (acc & q_) acc ^= full;
      if ((b.value >> bit) & 1u) acc ^= a.value;
    }
    return Elem{static_cast<std::uint32_t>(acc)};
  }
  const auto x = decode_poly(a.value, p, w);
  const auto y = decode_poly(b.value, p, w);
  std::vector<std::uint64_t> prod(2 * w - 1, 0);
  for (std::uint32_t i = 0; i < w; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < w; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
  }
  for (std::size_t i = prod.size(); i-- > w;) {
    const std::uint64_t lead = prod[i];
    if (lead == 0) continue;
    for (std::uint32_t j = 0; j < w; ++j) {
      const std::uint64_t s = lead * spec_.modulus[j] % p;
      prod[i - w + j] = (prod[i - w + j] + p - s) % p;
    }
    prod[i] = 0;
  }
  std::uint64_t out = 0;
  for (std::uint32_t i = w; i-- > 0;) out = out * p + prod[i];
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::slow_pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = poly_mul(result, base);
    base = poly_mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  if (!log_.empty()) return Elem{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
  return slow_pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.value == 0) {
    if (e < 0) throw Error(ErrorCode::ZeroInverse, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const auto n = static_cast<std::int64_t>(q_ - 1);
  const auto reduced = static_cast<std::uint64_t>(((e % n) + n) % n);
  if (!log_.empty()) return Elem{exp_[(std::uint64_t{log_[a.value]} * reduced) % (q_ - 1)]};
  return slow_pow(a, reduced);
}

std::uint64_t Field::order(Elem a) const {
  if (a.value == 0) throw Error(ErrorCode::ZeroElement, "order of zero");
  std::uint64_t d = q_ - 1;
  for (auto f : order_factors_) {
    while (d % f == 0 && pow(a, static_cast<std::int64_t>(d / f)) == one()) d /= f;
  }
  return d;
}

Elem Field::frobenius(Elem a, std::uint32_t e) const {
  if (e >= spec_.w) {
    throw Error(ErrorCode::BadExponent,
                "automorphism exponent " + std::to_string(e) + " not below w=" + std::to_string(spec_.w));
  }
  return pow(a, static_cast<std::int64_t>(ipow(spec_.p, e)));
}

std::uint32_t Field::fixed_subfield_degree(std::uint32_t e) const {
  if (e >= spec_.w) {
    throw Error(ErrorCode::BadExponent,
                "automorphism exponent " + std::to_string(e) + " not below w=" + std::to_string(spec_.w));
  }
  return std::gcd(e, spec_.w);
}

std::string Field::render(Elem a) const { return std::to_string(a.value); }

Elem Field::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int base = 10;
  if (spec_.p == 2 && text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::OutOfRange, "cannot parse field element '" + std::string(text) + "'");
  }
  return elem(value);
}

}  // namespace convcodes
