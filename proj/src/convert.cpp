#include "convcodes/convert.hpp"

#include <algorithm>
#include <string>

#include "convcodes/error.hpp"
#include "convcodes/matrix.hpp"

namespace convcodes {
namespace {

bool guarantee_covers(const Field& field, const std::vector<Elem>& xi, std::size_t k_final, Guarantee g) {
  if (xi.size() > 3) return false;
  switch (g) {
    case Guarantee::Unverified: return false;
    case Guarantee::Char2:
      if (field.p() != 2 || k_final >= field.q()) return false;
      break;
    case Guarantee::GeneralField:
      if (k_final > field.w()) return false;
      break;
  }
  for (std::uint32_t e = 1; e < field.w(); ++e) {
    if (field.fixed_subfield_degree(e) != 1) continue;
    auto full = automorphism_scalars(field, e);
    if (std::equal(xi.begin(), xi.end(), full.begin())) return true;
  }
  return false;
}

AccessStats aggregate(const std::vector<AccessEvent>& log) {
  AccessStats stats;
  for (const auto& e : log) (e.kind == AccessKind::Read ? stats.symbols_read : stats.symbols_written)++;
  return stats;
}

std::string render_selector(const Selector& s) {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
  };
  return "rows " + list(s.rows) + " cols " + list(s.cols);
}

}  // namespace

ConvertiblePair::ConvertiblePair(std::size_t lambda, std::vector<Elem> xi, SystematicCode initial,
                                 SystematicCode final_code, Guarantee guarantee, bool final_mds)
    : lambda_(lambda),
      xi_(std::move(xi)),
      initial_(std::move(initial)),
      final_(std::move(final_code)),
      guarantee_(guarantee),
      final_mds_(final_mds) {
  const Field& f = *field();
  block_coeff_.assign(lambda_, std::vector<Elem>(xi_.size()));
  for (std::size_t j = 0; j < xi_.size(); ++j) {
    const Elem step = f.pow(xi_[j], static_cast<std::int64_t>(k_initial()));
    Elem c = f.one();
    for (std::size_t t = 0; t < lambda_; ++t) {
      block_coeff_[t][j] = c;
      c = f.mul(c, step);
    }
  }
}

ConvertiblePair ConvertiblePair::make(FieldPtr field, std::size_t k_initial, std::size_t r, std::size_t lambda,
                                      std::vector<Elem> xi, Guarantee claimed, bool require_mds) {
  if (lambda < 2) throw Error(ErrorCode::BadLambda, "merge regime needs lambda >= 2, got " + std::to_string(lambda));
  if (k_initial < 1) throw Error(ErrorCode::BadCode, "k_initial must be >= 1");
  if (xi.size() != r) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(xi.size()) + " scalars supplied for r = " + std::to_string(r));
  }
  const std::size_t k_final = lambda * k_initial;
  Matrix final_parity = vandermonde(field, k_final, xi);
  const bool proven = guarantee_covers(*field, xi, k_final, claimed);
  bool final_mds = true;
  if (!proven) {
    auto check = check_super_regular(final_parity);
    final_mds = check.super_regular;
    if (!check.super_regular && require_mds) {
      throw Error(ErrorCode::NotSuperRegular,
                  "V_" + std::to_string(k_final) + "(xi) has a singular submatrix at " +
                      render_selector(*check.witness));
    }
  }
  SystematicCode initial(vandermonde(field, k_initial, xi));
  SystematicCode final_code(std::move(final_parity));
  return ConvertiblePair(lambda, std::move(xi), std::move(initial), std::move(final_code),
                         proven ? claimed : Guarantee::Unverified, final_mds);
}

std::vector<std::vector<Elem>> ConvertiblePair::encode_initial(std::span<const Elem> message) const {
  if (message.size() != k_final()) {
    throw Error(ErrorCode::LengthMismatch,
                "message has " + std::to_string(message.size()) + " symbols, expected " + std::to_string(k_final()));
  }
  std::vector<std::vector<Elem>> out;
  out.reserve(lambda_);
  for (std::size_t t = 0; t < lambda_; ++t) out.push_back(initial_.encode(message.subspan(t * k_initial(), k_initial())));
  return out;
}

void ConvertiblePair::check_inputs(std::span<const std::vector<Elem>> initial) const {
  if (initial.size() != lambda_) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(initial.size()) + " initial codewords supplied, expected " + std::to_string(lambda_));
  }
  for (std::size_t t = 0; t < lambda_; ++t) {
    if (initial[t].size() != n_initial()) {
      throw Error(ErrorCode::LengthMismatch, "initial codeword " + std::to_string(t + 1) + " has " +
                                                 std::to_string(initial[t].size()) + " symbols, expected " +
                                                 std::to_string(n_initial()));
    }
    for (auto s : initial[t]) field()->elem(s.value);
  }
}

ConversionResult ConvertiblePair::convert_merge(std::span<const std::vector<Elem>> initial, bool recheck) const {
  check_inputs(initial);
  if (recheck) {
    for (std::size_t t = 0; t < lambda_; ++t) {
      std::span<const Elem> data(initial[t].data(), k_initial());
      if (initial_.encode(data) != initial[t]) {
        throw Error(ErrorCode::InvalidInitialCodeword,
                    "initial codeword " + std::to_string(t + 1) + " fails the parity check");
      }
    }
  }
  const Field& f = *field();
  const std::size_t kI = k_initial();
  ConversionResult result;
  result.codeword.reserve(n_final());
  for (std::size_t t = 0; t < lambda_; ++t) {
    result.codeword.insert(result.codeword.end(), initial[t].begin(), initial[t].begin() + static_cast<std::ptrdiff_t>(kI));
  }
  for (std::size_t j = 0; j < r(); ++j) {
    Elem acc = f.zero();
    for (std::size_t t = 0; t < lambda_; ++t) {
      result.log.push_back({t, kI + j, AccessKind::Read});
      acc = f.add(acc, f.mul(block_coeff_[t][j], initial[t][kI + j]));
    }
    result.codeword.push_back(acc);
    result.log.push_back({lambda_, k_final() + j, AccessKind::Write});
  }
  result.stats = aggregate(result.log);
  return result;
}

ConversionResult ConvertiblePair::default_convert(std::span<const std::vector<Elem>> initial) const {
  check_inputs(initial);
  const std::size_t kI = k_initial();
  ConversionResult result;
  std::vector<Elem> message;
  message.reserve(k_final());
  for (std::size_t t = 0; t < lambda_; ++t) {
    for (std::size_t i = 0; i < kI; ++i) {
      result.log.push_back({t, i, AccessKind::Read});
      message.push_back(initial[t][i]);
    }
  }
  result.codeword = final_.encode(message);
  for (std::size_t j = 0; j < r(); ++j) result.log.push_back({lambda_, k_final() + j, AccessKind::Write});
  result.stats = aggregate(result.log);
  return result;
}

bool ConvertiblePair::verify_conversion(std::span<const Elem> message) const {
  const auto initial = encode_initial(message);
  return convert_merge(initial).codeword == final_.encode(message);
}

}  // namespace convcodes
