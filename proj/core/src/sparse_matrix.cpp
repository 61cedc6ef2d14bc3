#include "zeta3/sparse_matrix.hpp"

#include <string>

#include "zeta3/error.hpp"

namespace zeta3 {

void SparseIntegerMatrix::add(std::size_t row, std::size_t col, std::int64_t delta) {
  if (row >= n_ || col >= n_) {
    throw Error("matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                ") out of range for dimension " + std::to_string(n_));
  }
  if (delta == 0) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t SparseIntegerMatrix::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<MatrixEntry> SparseIntegerMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(entries_.size());
  for (const auto& [rc, v] : entries_) out.push_back({rc.first, rc.second, v});
  return out;
}

std::vector<std::pair<std::size_t, std::int64_t>> SparseIntegerMatrix::row(std::size_t r) const {
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (auto it = entries_.lower_bound({r, 0}); it != entries_.end() && it->first.first == r; ++it) {
    out.emplace_back(it->first.second, it->second);
  }
  return out;
}

std::vector<std::int64_t> SparseIntegerMatrix::row_sums() const {
  std::vector<std::int64_t> s(n_, 0);
  for (const auto& [rc, v] : entries_) s[rc.first] += v;
  return s;
}

std::vector<std::int64_t> SparseIntegerMatrix::col_sums() const {
  std::vector<std::int64_t> s(n_, 0);
  for (const auto& [rc, v] : entries_) s[rc.second] += v;
  return s;
}

std::int64_t SparseIntegerMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

SparseIntegerMatrix SparseIntegerMatrix::transpose() const {
  SparseIntegerMatrix t(n_);
  for (const auto& [rc, v] : entries_) t.entries_.emplace(std::make_pair(rc.second, rc.first), v);
  return t;
}

SparseIntegerMatrix SparseIntegerMatrix::operator-() const {
  SparseIntegerMatrix t = *this;
  for (auto& [rc, v] : t.entries_) v = -v;
  return t;
}

IntegerMatrix SparseIntegerMatrix::to_dense() const {
  IntegerMatrix d(n_, n_);
  for (const auto& [rc, v] : entries_) d(rc.first, rc.second) = v;
  return d;
}

}  // namespace zeta3
