#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "convcodes/codes.hpp"
#include "convcodes/constructions.hpp"
#include "convcodes/galois.hpp"

namespace convcodes {

struct AccessStats {
  std::uint64_t symbols_read = 0;
  std::uint64_t symbols_written = 0;

  bool operator==(const AccessStats&) const = default;
};

enum class AccessKind { Read, Write };

/// One symbol touched during conversion. Codeword indices 0..lambda-1 name
/// the initial codewords, lambda names the final one; symbols are 0-indexed.
struct AccessEvent {
  std::size_t codeword;
  std::size_t symbol;
  AccessKind kind;

  auto operator<=>(const AccessEvent&) const = default;
};

struct ConversionResult {
  std::vector<Elem> codeword;
  AccessStats stats;
  std::vector<AccessEvent> log;
};

/// Merge-regime pair: lambda [kI + r, kI] codewords with parity V_kI(xi)
/// become one [lambda kI + r, lambda kI] codeword with parity V_{lambda kI}(xi).
/// Data is partitioned into consecutive blocks of kI symbols.
class ConvertiblePair {
 public:
  /// Throws BadLambda, ZeroScalar or NotSuperRegular. The brute-force scan of
  /// V_{kF}(xi) is skipped when `claimed` is a guarantee that covers kF and
  /// xi really are the automorphism scalars it refers to. With
  /// `require_mds` off a failing scan is recorded instead of thrown; the
  /// conversion identity holds either way, only erasure tolerance is lost.
  static ConvertiblePair make(FieldPtr field, std::size_t k_initial, std::size_t r, std::size_t lambda,
                              std::vector<Elem> xi, Guarantee claimed = Guarantee::Unverified,
                              bool require_mds = true);

  const FieldPtr& field() const noexcept { return initial_.field(); }
  std::size_t k_initial() const noexcept { return initial_.k(); }
  std::size_t k_final() const noexcept { return final_.k(); }
  std::size_t n_initial() const noexcept { return initial_.n(); }
  std::size_t n_final() const noexcept { return final_.n(); }
  std::size_t r() const noexcept { return initial_.r(); }
  std::size_t lambda() const noexcept { return lambda_; }
  const std::vector<Elem>& scalars() const noexcept { return xi_; }
  const SystematicCode& initial_code() const noexcept { return initial_; }
  const SystematicCode& final_code() const noexcept { return final_; }
  /// True when super-regularity came from a construction guarantee.
  bool proven_by_construction() const noexcept { return guarantee_ != Guarantee::Unverified; }
  Guarantee guarantee() const noexcept { return guarantee_; }
  /// False only for pairs made with require_mds off whose V_kF(xi) failed.
  bool final_is_mds() const noexcept { return final_mds_; }

  /// Splits a kF-symbol message into lambda blocks and encodes each.
  std::vector<std::vector<Elem>> encode_initial(std::span<const Elem> message) const;

  /// Parity-only conversion: final parity j is sum_t xi_j^{(t-1) kI} times
  /// parity j of initial codeword t. Data symbols stay in place unread.
  /// Throws LengthMismatch, or InvalidInitialCodeword when `recheck` is set
  /// and an input is not a codeword of the initial code.
  ConversionResult convert_merge(std::span<const std::vector<Elem>> initial, bool recheck = false) const;

  /// Re-encoding baseline: reads every data symbol and recomputes parities.
  ConversionResult default_convert(std::span<const std::vector<Elem>> initial) const;

  /// encode_initial -> convert_merge equals direct final-code encoding.
  bool verify_conversion(std::span<const Elem> message) const;

 private:
  ConvertiblePair(std::size_t lambda, std::vector<Elem> xi, SystematicCode initial, SystematicCode final_code,
                  Guarantee guarantee, bool final_mds);
  void check_inputs(std::span<const std::vector<Elem>> initial) const;

  std::size_t lambda_;
  std::vector<Elem> xi_;
  SystematicCode initial_;
  SystematicCode final_;
  Guarantee guarantee_;
  bool final_mds_;
  // block_coeff_[t][j] = xi_j^{t kI}
  std::vector<std::vector<Elem>> block_coeff_;
};

}  // namespace convcodes
