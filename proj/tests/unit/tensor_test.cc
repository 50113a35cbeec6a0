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

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "ntts/tensor.h"

namespace ntts::tensor {
namespace {

using testing::SameBits;

Matrix RandomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                    Layout layout) {
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> v(r * c);
  for (float& x : v) x = u(rng);
  return Matrix(r, c, v, layout);
}

TEST_CASE("matvec hand examples") {
  const std::vector<float> v{1, 2, 3};
  CHECK(MatVec(Matrix::Identity(3), v) == v);
  CHECK(MatVec(Matrix(3, 3), v) == std::vector<float>{0, 0, 0});
  const std::vector<float> m{1, 2, 3, 4};
  for (Layout layout : {Layout::kRowMajor, Layout::kColumnMajor}) {
    CHECK(MatVec(Matrix(2, 2, m, layout), std::vector<float>{1, 1}) ==
          std::vector<float>{3, 7});
  }
}

TEST_CASE("matvec rejects shape mismatch") {
  CHECK_THROWS_AS(MatVec(Matrix(2, 3), std::vector<float>{1, 2}),
                  std::invalid_argument);
  std::vector<float> out(3);
  CHECK_THROWS_AS(MatVecInto(Matrix(2, 2), std::vector<float>{1, 2}, out),
                  std::invalid_argument);
}

TEST_CASE("matvec is identical across layouts and counts its work") {
  std::mt19937_64 rng(11);
  for (std::size_t r : {1u, 3u, 17u, 64u}) {
    for (std::size_t c : {1u, 2u, 5u, 31u, 128u}) {
      const Matrix col = RandomMatrix(rng, r, c, Layout::kColumnMajor);
      const Matrix row = col.WithLayout(Layout::kRowMajor);
      std::vector<float> v(c);
      std::uniform_real_distribution<float> u(-2.0f, 2.0f);
      for (float& x : v) x = u(rng);
      OpCounters counters;
      const auto a = MatVec(col, v, &counters);
      CHECK(SameBits(a, MatVec(row, v)));
      CHECK(counters.matvec_count == 1);
      CHECK(counters.matvec_macs == r * c);
      // Ascending-column float accumulation starting from +0.
      for (std::size_t i = 0; i < r; ++i) {
        float acc = 0.0f;
        for (std::size_t j = 0; j < c; ++j) acc = acc + col.at(i, j) * v[j];
        CHECK(a[i] == acc);
      }
    }
  }
}

TEST_CASE("matvec is linear") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = RandomMatrix(rng, 24, 40, Layout::kColumnMajor);
    std::vector<float> x(40), y(40), mix(40);
    const float a = u(rng), b = u(rng);
    for (std::size_t j = 0; j < 40; ++j) {
      x[j] = u(rng);
      y[j] = u(rng);
      mix[j] = a * x[j] + b * y[j];
    }
    const auto lhs = MatVec(m, mix);
    const auto mx = MatVec(m, x);
    const auto my = MatVec(m, y);
    for (std::size_t i = 0; i < 24; ++i) {
      const double rhs = a * mx[i] + b * my[i];
      CHECK(std::abs(lhs[i] - rhs) <= 1e-5 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("affine hand examples") {
  CHECK(Affine(Matrix(1, 1), std::vector<float>{3}, std::vector<float>{5}) ==
        std::vector<float>{5});
  const std::vector<float> x{1, -2, 4};
  CHECK(Affine(Matrix::Identity(3), x, std::vector<float>{0, 0, 0}) == x);
  CHECK(Affine(Matrix(1, 1, std::vector<float>{2}), std::vector<float>{3},
               std::vector<float>{1}) == std::vector<float>{7});
  CHECK_THROWS_AS(Affine(Matrix(2, 1), std::vector<float>{1},
                         std::vector<float>{1}),
                  std::invalid_argument);
}

TEST_CASE("activation hand examples") {
  CHECK(Activate(std::vector<float>{0}, Activation::kSigmoid)[0] == 0.5f);
  CHECK(Activate(std::vector<float>{0}, Activation::kTanh)[0] == 0.0f);
  CHECK(Activate(std::vector<float>{-1, 2}, Activation::kRelu) ==
        std::vector<float>{0, 2});
}

TEST_CASE("elementary functions match float64 reference values") {
  const float xs[] = {-3.0f, -0.5f, 0.25f, 2.0f, 10.0f};
  const double exp_ref[] = {0.0497870684, 0.60653066, 1.28402542, 7.3890561,
                            22026.4658};
  const double sig_ref[] = {0.0474258732, 0.377540669, 0.562176501,
                            0.880797078, 0.999954602};
  const double tanh_ref[] = {-0.995054754, -0.462117157, 0.244918662,
                             0.96402758, 0.999999996};
  for (int i = 0; i < 5; ++i) {
    CHECK(Exp(xs[i]) == doctest::Approx(exp_ref[i]).epsilon(3e-7));
    CHECK(Sigmoid(xs[i]) == doctest::Approx(sig_ref[i]).epsilon(3e-7));
    CHECK(Tanh(xs[i]) == doctest::Approx(tanh_ref[i]).epsilon(3e-7));
  }
  const float ls[] = {0.001f, 0.3f, 7.0f, 1e6f};
  const double log_ref[] = {-6.90775528, -1.2039728, 1.94591015, 13.8155106};
  for (int i = 0; i < 4; ++i) {
    CHECK(Log(ls[i]) == doctest::Approx(log_ref[i]).epsilon(3e-7));
  }
}

TEST_CASE("elementary functions stay close to libm over a sweep") {
  double worst_exp = 0, worst_tanh = 0, worst_sig = 0, worst_log = 0;
  for (int i = -20000; i <= 20000; ++i) {
    const float x = static_cast<float>(i) * 1e-3f;
    worst_exp = std::max(worst_exp, std::abs(Exp(x) / std::exp(double{x}) - 1));
    worst_sig = std::max(
        worst_sig, std::abs(Sigmoid(x) - 1 / (1 + std::exp(-double{x}))));
    worst_tanh = std::max(worst_tanh, std::abs(Tanh(x) - std::tanh(double{x})));
  }
  for (int i = 1; i <= 40000; ++i) {
    const float x = static_cast<float>(i) * 2.5e-3f;
    worst_log = std::max(worst_log, std::abs(Log(x) - std::log(double{x})));
  }
  CHECK(worst_exp < 5e-7);
  CHECK(worst_sig < 2e-7);
  CHECK(worst_tanh < 2e-7);
  CHECK(worst_log < 5e-7);
  CHECK(Exp(-1000.0f) > 0.0f);
  CHECK(std::isfinite(Exp(1000.0f)));
  CHECK(Tanh(-50.0f) == -1.0f);
  CHECK(Sigmoid(-200.0f) >= 0.0f);
}

TEST_CASE("softmax") {
  CHECK(Softmax(std::vector<float>{0, 0}) == std::vector<float>{0.5f, 0.5f});
  for (float c : {-30.0f, 0.0f, 7.5f, 1000.0f}) {
    for (float p : Softmax(std::vector<float>{c, c, c, c})) CHECK(p == 0.25f);
  }
  const auto p = Softmax(std::vector<float>{0.0f, std::log(3.0f)});
  CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-6));
  const double ref[] = {0.0320586033, 0.0871443187, 0.236882818, 0.64391426};
  const auto q = Softmax(std::vector<float>{1, 2, 3, 4});
  for (int i = 0; i < 4; ++i) CHECK(q[i] == doctest::Approx(ref[i]).epsilon(1e-6));
  CHECK_THROWS_AS(Softmax(std::vector<float>{}), std::invalid_argument);
}

TEST_CASE("argmax") {
  CHECK(Argmax(std::vector<float>{1, 3, 2}) == 1);
  CHECK(Argmax(std::vector<float>{7, 7}) == 0);
  CHECK(Argmax(std::vector<float>{-1}) == 0);
  CHECK_THROWS(Argmax(std::vector<float>{}));
}

}  // namespace
}  // namespace ntts::tensor
