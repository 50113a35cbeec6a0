// Copyright 2026 The ntts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ntts/tensor.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ntts::tensor {
namespace {

std::string ShapeString(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Layout layout)
    : rows_(rows), cols_(cols), layout_(layout), data_(rows * cols, 0.0f) {}

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::span<const float> row_major_values, Layout layout)
    : Matrix(rows, cols, layout) {
  if (row_major_values.size() != rows * cols) {
    throw std::invalid_argument("Matrix: expected " +
                                std::to_string(rows * cols) + " values for " +
                                ShapeString(rows, cols) + ", got " +
                                std::to_string(row_major_values.size()));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      at(r, c) = row_major_values[r * cols + c];
    }
  }
}

Matrix Matrix::Identity(std::size_t n, Layout layout) {
  Matrix m(n, n, layout);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0f;
  return m;
}

Matrix Matrix::WithLayout(Layout layout) const {
  if (layout == layout_) return *this;
  Matrix out(rows_, cols_, layout);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  }
  return out;
}

std::vector<float> Matrix::RowMajorValues() const {
  if (layout_ == Layout::kRowMajor) return data_;
  return WithLayout(Layout::kRowMajor).data_;
}

OpCounters& OpCounters::operator+=(const OpCounters& other) {
  matvec_count += other.matvec_count;
  matvec_macs += other.matvec_macs;
  head_evals += other.head_evals;
  return *this;
}

namespace {

// y = m * x over ascending columns. Columns are consumed in blocks of four
// with y[r] kept in a register, which does not change the order of the
// additions seen by any single output element.
void ColumnMajorMatVec(const float* __restrict m, std::size_t rows,
                       std::size_t cols, const float* __restrict x,
                       float* __restrict y) {
  std::fill(y, y + rows, 0.0f);
  std::size_t c = 0;
  for (; c + 4 <= cols; c += 4) {
    const float x0 = x[c], x1 = x[c + 1], x2 = x[c + 2], x3 = x[c + 3];
    const float* __restrict c0 = m + c * rows;
    const float* __restrict c1 = c0 + rows;
    const float* __restrict c2 = c1 + rows;
    const float* __restrict c3 = c2 + rows;
    for (std::size_t r = 0; r < rows; ++r) {
      float acc = y[r];
      acc += c0[r] * x0;
      acc += c1[r] * x1;
      acc += c2[r] * x2;
      acc += c3[r] * x3;
      y[r] = acc;
    }
  }
  for (; c < cols; ++c) {
    const float xc = x[c];
    const float* __restrict col = m + c * rows;
    for (std::size_t r = 0; r < rows; ++r) y[r] += col[r] * xc;
  }
}

}  // namespace

void MatVecInto(const Matrix& m, std::span<const float> v, std::span<float> out,
                OpCounters* counters) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (v.size() != cols || out.size() != rows) {
    throw std::invalid_argument("MatVec: matrix " + ShapeString(rows, cols) +
                                " with vector of " + std::to_string(v.size()) +
                                " into " + std::to_string(out.size()));
  }
  const float* data = m.data().data();
  float* y = out.data();
  if (m.layout() == Layout::kColumnMajor) {
    ColumnMajorMatVec(data, rows, cols, v.data(), y);
  } else {
    for (std::size_t r = 0; r < rows; ++r) {
      const float* row = data + r * cols;
      float acc = 0.0f;
      for (std::size_t c = 0; c < cols; ++c) acc += row[c] * v[c];
      y[r] = acc;
    }
  }
  if (counters != nullptr) {
    ++counters->matvec_count;
    counters->matvec_macs += static_cast<std::uint64_t>(rows) * cols;
  }
}

Vector MatVec(const Matrix& m, std::span<const float> v, OpCounters* counters) {
  Vector out(m.rows());
  MatVecInto(m, v, out, counters);
  return out;
}

Vector Affine(const Matrix& w, std::span<const float> x,
              std::span<const float> b, OpCounters* counters) {
  if (b.size() != w.rows()) {
    throw std::invalid_argument("Affine: bias of " + std::to_string(b.size()) +
                                " for " + std::to_string(w.rows()) + " rows");
  }
  Vector out = MatVec(w, x, counters);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

void ActivateInPlace(std::span<float> v, Activation kind) {
  switch (kind) {
    case Activation::kSigmoid:
      for (float& x : v) x = Sigmoid(x);
      break;
    case Activation::kTanh:
      for (float& x : v) x = Tanh(x);
      break;
    case Activation::kRelu:
      for (float& x : v) x = Relu(x);
      break;
  }
}

Vector Activate(std::span<const float> v, Activation kind) {
  Vector out(v.begin(), v.end());
  ActivateInPlace(out, kind);
  return out;
}

Vector Softmax(std::span<const float> logits) {
  if (logits.empty()) throw std::invalid_argument("Softmax: empty input");
  const float max = *std::max_element(logits.begin(), logits.end());
  Vector out(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - max);
    total += out[i];
  }
  const float inv = static_cast<float>(1.0 / total);
  for (float& p : out) p *= inv;
  return out;
}

std::size_t Argmax(std::span<const float> v) {
  if (v.empty()) throw std::invalid_argument("Argmax: empty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

}  // namespace ntts::tensor
