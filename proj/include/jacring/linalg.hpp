#pragma once

// Exact dense linear algebra over a coefficient field.

#include <cstddef>
#include <utility>
#include <vector>

#include "jacring/errors.hpp"

namespace jacring {

template <class Field>
class DenseMatrix {
 public:
  using Element = typename Field::Element;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product: inner dimensions differ");
    DenseMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
        }
      }
    }
    return r;
  }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const {
    std::vector<Element> a(data_);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && field_.is_zero(a[piv * cols_ + c])) ++piv;
      if (piv == rows_) continue;
      if (piv != r) {
        for (std::size_t j = c; j < cols_; ++j) {
          std::swap(a[piv * cols_ + j], a[r * cols_ + j]);
        }
      }
      const Element inv = field_.inv(a[r * cols_ + c]);
      for (std::size_t j = c; j < cols_; ++j) a[r * cols_ + j] = field_.mul(a[r * cols_ + j], inv);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const Element f = a[i * cols_ + c];
        if (field_.is_zero(f)) continue;
        for (std::size_t j = c; j < cols_; ++j) {
          a[i * cols_ + j] = field_.sub_mul(a[i * cols_ + j], f, a[r * cols_ + j]);
        }
      }
      ++r;
    }
    return r;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Reduced row echelon form built one sparse row at a time. Columns are
/// indexed 0..width-1; the pivot of a row is its smallest nonzero column.
/// After `finish()` every pivot row has a unit at its pivot and zeros in all
/// other pivot columns.
template <class Field>
class SparseEchelon {
 public:
  using Element = typename Field::Element;
  using Row = std::vector<std::pair<std::size_t, Element>>;  // sorted by column

  SparseEchelon(Field field, std::size_t width)
      : field_(std::move(field)), width_(width), pivot_row_(width, kNone),
        scratch_(width, field_.zero()) {}

  /// Reduces `row` against the current pivots; keeps it if it adds rank.
  void insert(const Row& row) {
    for (const auto& [c, v] : row) scratch_[c] = field_.add(scratch_[c], v);
    std::size_t lead = kNone;
    for (std::size_t c = row.empty() ? width_ : row.front().first; c < width_; ++c) {
      if (field_.is_zero(scratch_[c])) continue;
      const std::size_t p = pivot_row_[c];
      if (p == kNone) {
        if (lead == kNone) lead = c;
        continue;
      }
      const Element f = scratch_[c];
      for (const auto& [cc, v] : rows_[p]) scratch_[cc] = field_.sub_mul(scratch_[cc], f, v);
    }
    if (lead == kNone) return;
    const Element inv = field_.inv(scratch_[lead]);
    Row reduced;
    for (std::size_t c = lead; c < width_; ++c) {
      if (!field_.is_zero(scratch_[c])) {
        reduced.emplace_back(c, field_.mul(scratch_[c], inv));
        scratch_[c] = field_.zero();
      }
    }
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(reduced));
  }

  /// Back-substitution: clears entries above later pivots.
  /// A row was reduced against every earlier row when inserted, so its
  /// remaining pivot-column entries belong to later rows; walking rows in
  /// reverse insertion order only ever subtracts fully reduced rows.
  void finish() {
    for (std::size_t i = rows_.size(); i-- > 0;) {
      const Row& row = rows_[i];
      bool dirty = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (pivot_row_[row[k].first] != kNone) {
          dirty = true;
          break;
        }
      }
      if (!dirty) continue;
      const std::size_t lead = row.front().first;
      for (const auto& [c, v] : row) scratch_[c] = v;
      for (std::size_t c = lead + 1; c < width_; ++c) {
        if (field_.is_zero(scratch_[c]) || pivot_row_[c] == kNone) continue;
        const Element f = scratch_[c];
        for (const auto& [cc, v] : rows_[pivot_row_[c]]) {
          scratch_[cc] = field_.sub_mul(scratch_[cc], f, v);
        }
      }
      Row reduced;
      for (std::size_t c = lead; c < width_; ++c) {
        if (!field_.is_zero(scratch_[c])) {
          reduced.emplace_back(c, scratch_[c]);
          scratch_[c] = field_.zero();
        }
      }
      rows_[i] = std::move(reduced);
    }
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] != kNone; }
  const Row& pivot_row(std::size_t c) const { return rows_[pivot_row_[c]]; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Field field_;
  std::size_t width_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Row> rows_;
  std::vector<Element> scratch_;
};

}  // namespace jacring
