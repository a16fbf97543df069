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


#include "anticode/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "anticode/error.hpp"

namespace anticode {

GfMatrix::GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw InvalidArgument("matrix needs a field");
}

GfMatrix::GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
                   std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (!field_) throw InvalidArgument("matrix needs a field");
  if (data_.size() != rows_ * cols_) {
    throw InvalidArgument("matrix has " + std::to_string(data_.size()) + " entries, expected " +
                          std::to_string(rows_ * cols_));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!field_->contains(data_[i])) {
      throw InvalidArgument("entry " + std::to_string(data_[i]) + " at (" +
                            std::to_string(i / cols_) + "," + std::to_string(i % cols_) +
                            ") is not an element of GF(" + std::to_string(field_->q()) + ")");
    }
  }
}

GfMatrix GfMatrix::from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Element> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidArgument("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return GfMatrix(std::move(field), r, c, std::move(data));
}

GfMatrix GfMatrix::from_columns(FieldPtr field, std::size_t rows,
                                const std::vector<std::vector<Element>>& columns) {
  std::vector<Element> data(rows * columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) data[i * columns.size() + j] = columns[j][i];
  }
  return GfMatrix(std::move(field), rows, columns.size(), std::move(data));
}

std::vector<Element> GfMatrix::column(std::size_t c) const {
  std::vector<Element> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

void GfMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

void GfMatrix::scale_row(std::size_t r, Element factor) noexcept {
  for (auto& v : row(r)) v = field_->mul(v, factor);
}

void GfMatrix::add_row_multiple(std::size_t dst, std::size_t src, Element factor) noexcept {
  if (factor == 0) return;
  const auto& f = *field_;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Element s = data_[src * cols_ + c];
    if (s != 0) data_[dst * cols_ + c] = f.add(data_[dst * cols_ + c], f.mul(factor, s));
  }
}

bool operator==(const GfMatrix& a, const GfMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.data_ != b.data_) return false;
  if (!a.field_ || !b.field_) return a.field_ == b.field_;
  return a.field_->spec() == b.field_->spec();
}

RowEchelon row_reduce(const GfMatrix& m) {
  RowEchelon out{m, 0, {}};
  GfMatrix& a = out.reduced;
  if (a.rows() == 0) return out;
  const auto& f = *a.field();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    a.scale_row(rank, f.inv(a.at(rank, c)));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != rank && a.at(r, c) != 0) a.add_row_multiple(r, rank, f.neg(a.at(r, c)));
    }
    out.pivot_columns.push_back(c);
    ++rank;
  }
  out.rank = rank;
  return out;
}

std::size_t mat_rank(const GfMatrix& m) { return row_reduce(m).rank; }

GfMatrix mat_kernel(const GfMatrix& m) {
  const auto echelon = row_reduce(m);
  const auto& f = *m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < echelon.rank; ++i) {
      v[echelon.pivot_columns[i]] = f.neg(echelon.reduced.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return GfMatrix(m.field(), 0, n);
  return GfMatrix::from_rows(m.field(), basis);
}

GfMatrix independent_rows(const GfMatrix& m) {
  std::vector<std::vector<Element>> kept;
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto candidate = kept;
    candidate.emplace_back(m.row(r).begin(), m.row(r).end());
    const auto next = mat_rank(GfMatrix::from_rows(m.field(), candidate));
    if (next > rank) {
      kept = std::move(candidate);
      rank = next;
    }
  }
  if (kept.empty()) return GfMatrix(m.field(), 0, m.cols());
  return GfMatrix::from_rows(m.field(), kept);
}

std::vector<Element> vec_mat(std::span<const Element> x, const GfMatrix& m) {
  if (x.size() != m.rows()) throw InvalidArgument("vector length does not match matrix rows");
  const auto& f = *m.field();
  std::vector<Element> out(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const auto row = m.row(i);
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (row[c] != 0) out[c] = f.add(out[c], f.mul(x[i], row[c]));
    }
  }
  return out;
}

}  // namespace anticode
