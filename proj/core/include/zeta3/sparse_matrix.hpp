#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zeta3/determinant.hpp"

namespace zeta3 {

/// One stored entry of a SparseIntegerMatrix.
struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Square integer matrix in sparse triplet form. Entries are kept in
/// (row, col) order and explicit zeros are never stored.
class SparseIntegerMatrix {
 public:
  SparseIntegerMatrix() = default;
  explicit SparseIntegerMatrix(std::size_t dimension) : n_(dimension) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  /// Adds `delta` to entry (row, col); erases it when the sum becomes zero.
  void add(std::size_t row, std::size_t col, std::int64_t delta);
  std::int64_t at(std::size_t row, std::size_t col) const;

  /// Entries in canonical (row, col) order.
  std::vector<MatrixEntry> entries() const;
  /// Column/value pairs of one row in ascending column order.
  std::vector<std::pair<std::size_t, std::int64_t>> row(std::size_t r) const;

  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> col_sums() const;
  std::int64_t trace() const;

  SparseIntegerMatrix transpose() const;
  SparseIntegerMatrix operator-() const;
  IntegerMatrix to_dense() const;

  friend bool operator==(const SparseIntegerMatrix&, const SparseIntegerMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> entries_;
};

}  // namespace zeta3
