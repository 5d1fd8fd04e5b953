#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "convcodes/galois.hpp"

namespace convcodes {

/// Row and column index sets, 1-indexed and strictly increasing.
struct Selector {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  bool operator==(const Selector&) const = default;
};

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Throws ShapeMismatch if entries.size() != rows * cols.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  // 0-indexed access.
  Elem at(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) noexcept { entries_[i * cols_ + j] = v; }
  std::span<const Elem> row(std::size_t i) const noexcept { return {entries_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  /// M_{I x J} for a 1-indexed selector. Throws BadSelector.
  Matrix submatrix(const Selector& sel) const;
  /// Throws MixedFields or ShapeMismatch.
  Matrix multiply(const Matrix& rhs) const;

  bool operator==(const Matrix& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

/// V_k(xi): entry (i, j) = xi_j^{i-1} (1-indexed). Throws ZeroScalar.
Matrix vandermonde(const FieldPtr& field, std::size_t k, std::span<const Elem> xi);

/// Scalars of m if it is a Vandermonde matrix with nonzero scalars.
std::optional<std::vector<Elem>> vandermonde_scalars(const Matrix& m);

/// Gaussian elimination. Throws NotSquare.
Elem determinant(const Matrix& m);

/// Solves A x = b for square A; nullopt when A is singular.
/// Throws NotSquare or ShapeMismatch.
std::optional<std::vector<Elem>> solve_linear(const Matrix& a, std::span<const Elem> b);

/// Re-anchors a sorted row set so that its smallest index becomes 1.
std::vector<std::size_t> shift_selector(std::span<const std::size_t> rows);

struct SuperRegularOptions {
  /// Only enumerate row sets containing row 1 when the matrix is
  /// Vandermonde with nonzero scalars.
  bool use_vandermonde_reduction = true;
  /// Throws BudgetExceeded once this many determinants have been evaluated.
  std::uint64_t max_determinants = std::numeric_limits<std::uint64_t>::max();
};

struct SuperRegularity {
  bool super_regular = true;
  /// First singular selector in (size, rows, cols) lexicographic order.
  std::optional<Selector> witness;
  std::uint64_t determinants = 0;
  bool reduced = false;
};

SuperRegularity check_super_regular(const Matrix& m, const SuperRegularOptions& opts = {});

inline bool is_super_regular(const Matrix& m, bool use_vandermonde_reduction = true) {
  return check_super_regular(m, {use_vandermonde_reduction}).super_regular;
}

}  // namespace convcodes
