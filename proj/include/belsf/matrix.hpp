#pragma once

// Dense matrices over the base field GF(q) of a Field context.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "belsf/errors.hpp"
#include "belsf/gf.hpp"

namespace belsf {

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FqMatrix identity(std::size_t n) {
    FqMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

  FqMatrix multiply(const Field& F, const FqMatrix& b) const {
    if (cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    FqMatrix out(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint32_t v = (*this)(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = F.badd(out(i, j), F.bmul(v, b(k, j)));
      }
    return out;
  }

  std::vector<std::uint32_t> apply(const Field& F, const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) out[i] = F.badd(out[i], F.bmul((*this)(i, k), v[k]));
    return out;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref(const Field& F) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t piv = row;
      while (piv < rows_ && (*this)(piv, col) == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(row, c), (*this)(piv, c));
      const std::uint32_t iv = F.binv((*this)(row, col));
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) = F.bmul((*this)(row, c), iv);
      for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint32_t f = (*this)(r, col);
        if (r == row || f == 0) continue;
        for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) = F.bsub((*this)(r, c), F.bmul(f, (*this)(row, c)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank(const Field& F) const {
    FqMatrix m = *this;
    return m.rref(F).size();
  }

  std::optional<FqMatrix> inverse(const Field& F) const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    FqMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = 1;
    }
    const auto piv = aug.rref(F);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    FqMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
  }

  /// Null space basis. Vector k has a 1 at the k-th free column, zeros at the
  /// other free columns; vectors are ordered by free column.
  std::vector<std::vector<std::uint32_t>> kernel_basis(const Field& F) const {
    FqMatrix m = *this;
    const auto piv = m.rref(F);
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_piv[free]) continue;
      std::vector<std::uint32_t> v(cols_, 0);
      v[free] = 1;
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.bneg(m(r, free));
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> a_;
};

}  // namespace belsf
