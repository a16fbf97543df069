// Copyright 2026 The anticode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ANTICODE_MATRIX_HPP_
#define ANTICODE_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "anticode/gf.hpp"

namespace anticode {

// Dense row-major matrix over a GaloisField.
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  // Throws InvalidArgument on a size mismatch or an entry outside the field.
  GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static GfMatrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows);
  static GfMatrix from_columns(FieldPtr field, std::size_t rows,
                               const std::vector<std::vector<Element>>& columns);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Element at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v) noexcept { data_[r * cols_ + c] = v; }

  std::span<const Element> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::vector<Element> column(std::size_t c) const;
  const std::vector<Element>& entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void scale_row(std::size_t r, Element factor) noexcept;
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Element factor) noexcept;

  friend bool operator==(const GfMatrix& a, const GfMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

// Reduced row echelon form; the first `rank` rows are the nonzero rows.
struct RowEchelon {
  GfMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(const GfMatrix& m);
std::size_t mat_rank(const GfMatrix& m);

// Basis (as rows) of the right null space {x : m x = 0}; it has
// cols - rank(m) rows, possibly zero.
GfMatrix mat_kernel(const GfMatrix& m);

// Greedy maximal independent subset of rows, original order kept.
GfMatrix independent_rows(const GfMatrix& m);

// x * m for a row vector x of length m.rows().
std::vector<Element> vec_mat(std::span<const Element> x, const GfMatrix& m);

}  // namespace anticode

#endif  // ANTICODE_MATRIX_HPP_
