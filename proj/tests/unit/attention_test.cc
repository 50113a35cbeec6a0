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
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ntts/attention.h"

namespace ntts::attention {
namespace {

double Sum(const std::vector<float>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

// First and last index holding mass above `eps`.
std::pair<long, long> Support(const std::vector<float>& a, float eps = 0.0f) {
  long lo = -1, hi = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > eps) {
      if (lo < 0) lo = static_cast<long>(i);
      hi = static_cast<long>(i);
    }
  }
  return {lo, hi};
}

AttentionWeights RandomWeights(std::mt19937_64& rng, std::size_t query_dim,
                               std::size_t memory_dim, std::size_t attn_dim,
                               std::size_t kernels, std::size_t width) {
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  auto fill = [&](std::size_t r, std::size_t c) {
    std::vector<float> v(r * c);
    for (float& x : v) x = u(rng);
    return tensor::Matrix(r, c, v);
  };
  AttentionWeights w;
  w.query_proj = fill(attn_dim, query_dim);
  w.memory_proj = fill(attn_dim, memory_dim);
  w.location_proj = fill(attn_dim, kernels);
  w.n_kernels = kernels;
  w.kernel_width = width;
  w.location_kernels.resize(kernels * 2 * width);
  for (float& x : w.location_kernels) x = u(rng);
  w.score_vector.resize(attn_dim);
  w.score_bias.resize(attn_dim);
  for (float& x : w.score_vector) x = u(rng);
  for (float& x : w.score_bias) x = u(rng);
  return w;
}

EncoderMemory RandomMemory(std::mt19937_64& rng, std::size_t n,
                           std::size_t dim) {
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  EncoderMemory m;
  m.n_tokens = n;
  m.dim = dim;
  m.values.resize(n * dim);
  for (float& x : m.values) x = u(rng);
  return m;
}

TEST_CASE("variant names") {
  CHECK(ParseVariant("ls") == AttentionVariant::kLocationSensitive);
  CHECK(ParseVariant("mono") == AttentionVariant::kMonotonic);
  CHECK(ParseVariant("sma") == AttentionVariant::kStepwiseMonotonic);
  CHECK_FALSE(ParseVariant("gmm").has_value());
  for (auto v : {AttentionVariant::kLocationSensitive,
                 AttentionVariant::kMonotonic,
                 AttentionVariant::kStepwiseMonotonic}) {
    CHECK(ParseVariant(VariantName(v)) == v);
  }
}

TEST_CASE("alignment state") {
  auto s = AlignmentState::Initial(3);
  CHECK(s.alignment == std::vector<float>{1, 0, 0});
  CHECK(s.cumulative == std::vector<float>{0, 0, 0});
  s.Advance({0.5f, 0.5f, 0.0f});
  s.Advance({0.0f, 0.75f, 0.25f});
  CHECK(s.alignment == std::vector<float>{0.0f, 0.75f, 0.25f});
  CHECK(s.cumulative == std::vector<float>{0.5f, 1.25f, 0.25f});
}

TEST_CASE("energies") {
  std::mt19937_64 rng(21);
  const auto memory = RandomMemory(rng, 6, 5);
  const std::vector<float> query{0.2f, -0.4f, 0.9f};

  AttentionWeights zero = RandomWeights(rng, 3, 5, 4, 2, 3);
  for (auto* m : {&zero.query_proj, &zero.memory_proj, &zero.location_proj}) {
    for (float& x : m->data()) x = 0.0f;
  }
  std::fill(zero.location_kernels.begin(), zero.location_kernels.end(), 0.0f);
  std::fill(zero.score_vector.begin(), zero.score_vector.end(), 0.0f);
  std::fill(zero.score_bias.begin(), zero.score_bias.end(), 0.0f);
  CHECK(Energies(query, memory, AlignmentState::Initial(6), zero) ==
        std::vector<float>(6, 0.0f));

  const auto w = RandomWeights(rng, 3, 5, 4, 2, 3);
  auto state = AlignmentState::Initial(6);
  const auto e0 = Energies(query, memory, state, w);
  CHECK(e0.size() == 6);
  CHECK(e0 == Energies(query, ProcessMemory(memory, w), state, w));
  state.Advance({0.0f, 0.5f, 0.5f, 0.0f, 0.0f, 0.0f});
  CHECK(Energies(query, memory, state, w) != e0);

  const auto single = RandomMemory(rng, 1, 5);
  CHECK(Energies(query, single, AlignmentState::Initial(1), w).size() == 1);
  CHECK_THROWS_AS(Energies(std::vector<float>{1.0f}, memory,
                           AlignmentState::Initial(6), w),
                  std::invalid_argument);
}

TEST_CASE("location-sensitive step") {
  for (float p : StepLocationSensitive(std::vector<float>{0, 0, 0})) {
    CHECK(p == doctest::Approx(1.0 / 3));
  }
  const std::vector<float> e{0.3f, -1.2f, 2.0f, 0.0f};
  const auto a = StepLocationSensitive(e);
  auto shifted = e;
  for (float& x : shifted) x += 5.0f;
  const auto b = StepLocationSensitive(shifted);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-6));
  }
  const auto h = StepLocationSensitive(std::vector<float>{0.0f, std::log(3.0f)});
  CHECK(h[0] == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(h[1] == doctest::Approx(0.75).epsilon(1e-6));
}

TEST_CASE("monotonic step hand examples") {
  const std::vector<float> prev{0.2f, 0.5f, 0.3f};
  const auto stay = StepMonotonic(std::vector<float>{100, 100, 100}, prev);
  CHECK(stay == prev);
  for (float a : StepMonotonic(std::vector<float>{-100, -100, -100}, prev)) {
    CHECK(a == doctest::Approx(0.0));
  }
  const auto a = StepMonotonic(std::vector<float>{0, 0}, std::vector<float>{1, 0});
  CHECK(a == std::vector<float>{0.5f, 0.25f});
  CHECK_THROWS_AS(StepMonotonic(std::vector<float>{0}, prev),
                  std::invalid_argument);
}

TEST_CASE("stepwise monotonic step hand examples") {
  const std::vector<float> prev{0.2f, 0.5f, 0.3f};
  CHECK(StepStepwiseMonotonic(std::vector<float>{100, 100, 100}, prev) == prev);
  const auto advance = StepStepwiseMonotonic(std::vector<float>{-100, 0, 0},
                                             std::vector<float>{1, 0, 0});
  CHECK(advance[0] == doctest::Approx(0.0));
  CHECK(advance[1] == doctest::Approx(1.0));
  CHECK(advance[2] == 0.0f);
  const auto a = StepStepwiseMonotonic(std::vector<float>{0, 0, 7},
                                       std::vector<float>{0.5f, 0.5f, 0});
  CHECK(a == std::vector<float>{0.25f, 0.5f, 0.25f});
}

TEST_CASE("context") {
  EncoderMemory m;
  m.n_tokens = 3;
  m.dim = 2;
  m.values = {1, 2, 3, 4, 5, 6};
  CHECK(Context(std::vector<float>{0, 1, 0}, m) == std::vector<float>{3, 4});
  const auto mean = Context(std::vector<float>{1.0f / 3, 1.0f / 3, 1.0f / 3}, m);
  CHECK(mean[0] == doctest::Approx(3.0));
  CHECK(mean[1] == doctest::Approx(4.0));
  EncoderMemory two;
  two.n_tokens = 2;
  two.dim = 1;
  two.values = {0, 4};
  CHECK(Context(std::vector<float>{0.25f, 0.75f}, two) == std::vector<float>{3});
  CHECK_THROWS_AS(Context(std::vector<float>{1}, m), std::invalid_argument);
}

TEST_CASE("stepwise monotonic invariants over random step sequences") {
  std::mt19937_64 rng(22);
  std::normal_distribution<float> energy(0.0f, 3.0f);
  for (int seq = 0; seq < 1000; ++seq) {
    const std::size_t n = 1 + rng() % 12;
    auto state = AlignmentState::Initial(n);
    auto [lo, hi] = Support(state.alignment);
    for (int step = 0; step < 25; ++step) {
      std::vector<float> e(n);
      for (float& x : e) x = energy(rng);
      auto next = StepStepwiseMonotonic(e, state.alignment);
      REQUIRE(std::abs(Sum(next) - Sum(state.alignment)) <= 1e-6);
      for (float a : next) REQUIRE(a >= 0.0f);
      const auto [nlo, nhi] = Support(next);
      REQUIRE(nlo >= lo);
      REQUIRE(nhi <= hi + 1);
      lo = nlo;
      hi = nhi;
      state.Advance(std::move(next));
    }
  }
}

TEST_CASE("monotonic mass never increases") {
  std::mt19937_64 rng(23);
  std::normal_distribution<float> energy(0.0f, 3.0f);
  for (int seq = 0; seq < 1000; ++seq) {
    const std::size_t n = 1 + rng() % 12;
    auto state = AlignmentState::Initial(n);
    for (int step = 0; step < 25; ++step) {
      std::vector<float> e(n);
      for (float& x : e) x = energy(rng);
      auto next = StepMonotonic(e, state.alignment);
      REQUIRE(Sum(next) <= Sum(state.alignment) + 1e-6);
      for (float a : next) REQUIRE(a >= 0.0f);
      state.Advance(std::move(next));
    }
  }
}

}  // namespace
}  // namespace ntts::attention
