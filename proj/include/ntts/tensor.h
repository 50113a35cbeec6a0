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

#ifndef NTTS_TENSOR_H_
#define NTTS_TENSOR_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ntts::tensor {

using Vector = std::vector<float>;

enum class Layout { kRowMajor, kColumnMajor };

// Dense float matrix. The layout only changes how `data` is ordered in
// memory; every kernel below produces bitwise-identical results for the
// same logical matrix regardless of layout.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols,
         Layout layout = Layout::kColumnMajor);
  // `row_major_values` is always given in row-major order and is reordered
  // into `layout` on construction.
  Matrix(std::size_t rows, std::size_t cols,
         std::span<const float> row_major_values,
         Layout layout = Layout::kColumnMajor);

  static Matrix Identity(std::size_t n, Layout layout = Layout::kColumnMajor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Layout layout() const { return layout_; }
  bool empty() const { return data_.empty(); }

  float at(std::size_t r, std::size_t c) const { return data_[Index(r, c)]; }
  float& at(std::size_t r, std::size_t c) { return data_[Index(r, c)]; }

  std::span<const float> data() const { return data_; }
  std::span<float> data() { return data_; }

  // Same logical matrix, stored in `layout`.
  Matrix WithLayout(Layout layout) const;
  // Values in row-major order, independent of the storage layout.
  std::vector<float> RowMajorValues() const;

 private:
  std::size_t Index(std::size_t r, std::size_t c) const {
    return layout_ == Layout::kRowMajor ? r * cols_ + c : c * rows_ + r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Layout layout_ = Layout::kColumnMajor;
  std::vector<float> data_;
};

// Per-run operation tallies. Never global: each session owns its counters.
struct OpCounters {
  std::uint64_t matvec_count = 0;
  std::uint64_t matvec_macs = 0;
  std::uint64_t head_evals = 0;

  void Reset() { *this = OpCounters{}; }
  OpCounters& operator+=(const OpCounters& other);
};

enum class Activation { kSigmoid, kTanh, kRelu };

// out = m * v. Accumulation runs over ascending column index for every row,
// starting from +0, so row- and column-major storage agree bit for bit.
// Throws std::invalid_argument on shape mismatch.
void MatVecInto(const Matrix& m, std::span<const float> v, std::span<float> out,
                OpCounters* counters = nullptr);
Vector MatVec(const Matrix& m, std::span<const float> v,
              OpCounters* counters = nullptr);

// w * x + b, with the bias added after the full product.
Vector Affine(const Matrix& w, std::span<const float> x,
              std::span<const float> b, OpCounters* counters = nullptr);

// Branch-free elementary functions. Every operation is plain IEEE float
// arithmetic, so a vectorized loop and a scalar call give identical bits.

// e^x with relative error below 2 ulp; x is clamped to [-87, 88].
inline float Exp(float x) {
  x = x < -87.0f ? -87.0f : x;
  x = x > 88.0f ? 88.0f : x;
  constexpr float kRound = 12582912.0f;  // 1.5 * 2^23
  const float n = (x * 1.44269504088896341f + kRound) - kRound;
  float r = x - n * 0.693359375f;
  r = r - n * -2.12194440e-4f;
  const float r2 = r * r;
  float p = 1.9875691500e-4f;
  p = p * r + 1.3981999507e-3f;
  p = p * r + 8.3334519073e-3f;
  p = p * r + 4.1665795894e-2f;
  p = p * r + 1.6666665459e-1f;
  p = p * r + 5.0000001201e-1f;
  const float y = p * r2 + r + 1.0f;
  const auto e = static_cast<std::int32_t>(n);
  return y * std::bit_cast<float>(static_cast<std::uint32_t>(e + 127) << 23);
}

// Natural log for positive normal x.
inline float Log(float x) {
  const auto bits = std::bit_cast<std::uint32_t>(x);
  float e = static_cast<float>(static_cast<std::int32_t>(bits >> 23) - 126);
  float m = std::bit_cast<float>((bits & 0x007fffffu) | 0x3f000000u);  // [0.5, 1)
  const bool low = m < 0.707106781186547524f;
  e = low ? e - 1.0f : e;
  m = low ? (m + m) - 1.0f : m - 1.0f;
  const float z = m * m;
  float p = 7.0376836292e-2f;
  p = p * m - 1.1514610310e-1f;
  p = p * m + 1.1676998740e-1f;
  p = p * m - 1.2420140846e-1f;
  p = p * m + 1.4249322787e-1f;
  p = p * m - 1.6668057665e-1f;
  p = p * m + 2.0000714765e-1f;
  p = p * m - 2.4999993993e-1f;
  p = p * m + 3.3333331174e-1f;
  float y = (p * m) * z;
  y = y + e * -2.12194440e-4f;
  y = y - 0.5f * z;
  return (m + y) + e * 0.693359375f;
}

inline float Sigmoid(float x) { return 1.0f / (1.0f + Exp(-x)); }

inline float Tanh(float x) {
  const float a = x < 0.0f ? -x : x;
  const float s = x * x;
  float p = -5.70498872745e-3f;
  p = p * s + 2.06390887954e-2f;
  p = p * s - 5.37397155531e-2f;
  p = p * s + 1.33314422036e-1f;
  p = p * s - 3.33332819422e-1f;
  const float small = (p * s) * x + x;
  const float large = 1.0f - 2.0f / (Exp(a + a) + 1.0f);
  return a < 0.625f ? small : (x < 0.0f ? -large : large);
}
inline float Relu(float x) { return x > 0.0f ? x : 0.0f; }

Vector Activate(std::span<const float> v, Activation kind);
void ActivateInPlace(std::span<float> v, Activation kind);

// Max-subtracted softmax. Throws std::invalid_argument on empty input.
Vector Softmax(std::span<const float> logits);

// Index of the maximum, lowest index on ties. Throws on empty input.
std::size_t Argmax(std::span<const float> v);

}  // namespace ntts::tensor

#endif  // NTTS_TENSOR_H_
