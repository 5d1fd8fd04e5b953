#include "convcodes/matrix.hpp"

#include <algorithm>
#include <utility>

#include "convcodes/combinatorics.hpp"
#include "convcodes/error.hpp"

namespace convcodes {
namespace {

// Determinant of the n x n row-major block in `a`, destroyed in place.
Elem eliminate(const Field& f, std::vector<Elem>& a, std::size_t n) {
  Elem det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].value == 0) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = f.neg(det);
    }
    const Elem lead = a[col * n + col];
    det = f.mul(det, lead);
    const Elem lead_inv = f.inv(lead);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Elem factor = f.mul(a[i * n + col], lead_inv);
      if (factor.value == 0) continue;
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[col * n + j]));
      }
    }
  }
  return det;
}

void check_selector(const Matrix& m, const Selector& sel) {
  auto valid = [](const std::vector<std::size_t>& idx, std::size_t bound) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 1 || idx[i] > bound) return false;
      if (i > 0 && idx[i] <= idx[i - 1]) return false;
    }
    return true;
  };
  if (!valid(sel.rows, m.rows()) || !valid(sel.cols, m.cols())) {
    throw Error(ErrorCode::BadSelector, "selector indices must be sorted, distinct and in range");
  }
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                              std::to_string(entries_.size()));
  }
  for (auto e : entries_) field_->elem(e.value);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.field()->one());
  return m;
}

Matrix Matrix::submatrix(const Selector& sel) const {
  check_selector(*this, sel);
  Matrix out(field_, sel.rows.size(), sel.cols.size());
  for (std::size_t i = 0; i < sel.rows.size(); ++i) {
    for (std::size_t j = 0; j < sel.cols.size(); ++j) {
      out.set(i, j, at(sel.rows[i] - 1, sel.cols[j] - 1));
    }
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw Error(ErrorCode::MixedFields, "matrix product across fields");
  if (cols_ != rhs.rows_) throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  const Field& f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Elem acc = f.zero();
      for (std::size_t t = 0; t < cols_; ++t) acc = f.add(acc, f.mul(at(i, t), rhs.at(t, j)));
      out.set(i, j, acc);
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_->same_as(*other.field_) && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

Matrix vandermonde(const FieldPtr& field, std::size_t k, std::span<const Elem> xi) {
  const Field& f = *field;
  Matrix m(field, k, xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) {
    f.elem(xi[j].value);
    if (xi[j].value == 0) throw Error(ErrorCode::ZeroScalar, "scalar " + std::to_string(j + 1) + " is zero");
    Elem power = f.one();
    for (std::size_t i = 0; i < k; ++i) {
      m.set(i, j, power);
      power = f.mul(power, xi[j]);
    }
  }
  return m;
}

std::optional<std::vector<Elem>> vandermonde_scalars(const Matrix& m) {
  const Field& f = *m.field();
  if (m.rows() == 0) return std::nullopt;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.at(0, j) != f.one()) return std::nullopt;
  }
  if (m.rows() == 1) return std::vector<Elem>(m.cols(), f.one());
  std::vector<Elem> xi(m.row(1).begin(), m.row(1).end());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (xi[j].value == 0) return std::nullopt;
    for (std::size_t i = 2; i < m.rows(); ++i) {
      if (m.at(i, j) != f.mul(m.at(i - 1, j), xi[j])) return std::nullopt;
    }
  }
  return xi;
}

Elem determinant(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix has no determinant");
  }
  std::vector<Elem> scratch = m.entries();
  return eliminate(*m.field(), scratch, m.rows());
}

std::optional<std::vector<Elem>> solve_linear(const Matrix& a, std::span<const Elem> b) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "linear system must be square");
  const std::size_t n = a.rows();
  if (b.size() != n) throw Error(ErrorCode::ShapeMismatch, "right-hand side length differs from system size");
  const Field& f = *a.field();
  // Augmented [A | b], Gauss-Jordan.
  const std::size_t w = n + 1;
  std::vector<Elem> aug(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = a.at(i, j);
    aug[i * w + n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot * w + col].value == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < w; ++j) std::swap(aug[pivot * w + j], aug[col * w + j]);
    const Elem lead_inv = f.inv(aug[col * w + col]);
    for (std::size_t j = col; j < w; ++j) aug[col * w + j] = f.mul(aug[col * w + j], lead_inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i * w + col].value == 0) continue;
      const Elem factor = aug[i * w + col];
      for (std::size_t j = col; j < w; ++j) {
        aug[i * w + j] = f.sub(aug[i * w + j], f.mul(factor, aug[col * w + j]));
      }
    }
  }
  std::vector<Elem> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i * w + n];
  return x;
}

std::vector<std::size_t> shift_selector(std::span<const std::size_t> rows) {
  std::vector<std::size_t> out(rows.begin(), rows.end());
  if (out.empty()) return out;
  const std::size_t offset = out.front() - 1;
  for (auto& r : out) r -= offset;
  return out;
}

SuperRegularity check_super_regular(const Matrix& m, const SuperRegularOptions& opts) {
  const Field& f = *m.field();
  SuperRegularity result;
  result.reduced = opts.use_vandermonde_reduction && vandermonde_scalars(m).has_value();

  const std::size_t k = m.rows();
  const std::size_t r = m.cols();
  std::vector<Elem> scratch;
  for (std::size_t size = 1; size <= std::min(k, r); ++size) {
    // Reduced mode: row 1 fixed, the remaining size-1 rows drawn from {2..k}.
    const std::size_t free_rows = result.reduced ? size - 1 : size;
    const std::size_t first_row = result.reduced ? 2 : 1;
    std::vector<std::size_t> tail = first_combination(free_rows, first_row);
    bool rows_left = free_rows == 0 || tail.back() <= k;
    while (rows_left) {
      std::vector<std::size_t> rows;
      rows.reserve(size);
      if (result.reduced) rows.push_back(1);
      rows.insert(rows.end(), tail.begin(), tail.end());

      std::vector<std::size_t> cols = first_combination(size);
      do {
        if (result.determinants >= opts.max_determinants) {
          throw Error(ErrorCode::BudgetExceeded,
                      "determinant budget of " + std::to_string(opts.max_determinants) + " exhausted");
        }
        scratch.resize(size * size);
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = 0; j < size; ++j) scratch[i * size + j] = m.at(rows[i] - 1, cols[j] - 1);
        }
        ++result.determinants;
        if (eliminate(f, scratch, size).value == 0) {
          result.super_regular = false;
          result.witness = Selector{rows, cols};
          return result;
        }
      } while (next_combination(cols, r));

      rows_left = free_rows > 0 && next_combination(tail, k);
    }
  }
  return result;
}

}  // namespace convcodes
