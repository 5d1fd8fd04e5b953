#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "convcodes/galois.hpp"
#include "convcodes/matrix.hpp"

namespace convcodes {

/// Received word: nullopt marks an erased symbol.
using Codeword = std::vector<std::optional<Elem>>;

Codeword to_received(std::span<const Elem> symbols);

/// [n, k] systematic linear code with generator [I_k | P].
class SystematicCode {
 public:
  /// Throws BadCode unless P has at least one row and one column.
  explicit SystematicCode(Matrix parity);

  const FieldPtr& field() const noexcept { return parity_.field(); }
  std::size_t n() const noexcept { return parity_.rows() + parity_.cols(); }
  std::size_t k() const noexcept { return parity_.rows(); }
  std::size_t r() const noexcept { return parity_.cols(); }
  const Matrix& parity() const noexcept { return parity_; }

  /// c = m^T [I | P]. Throws LengthMismatch.
  std::vector<Elem> encode(std::span<const Elem> message) const;

  /// Recovers the message from any k surviving symbols. Known systematic
  /// symbols are copied; only the erased ones are solved for. Throws
  /// LengthMismatch, TooFewSymbols, or SingularSubsystem when the surviving
  /// parities cannot determine the erased data (P not super-regular).
  std::vector<Elem> decode(const Codeword& received) const;

  bool is_mds() const;

 private:
  Matrix parity_;
};

}  // namespace convcodes
