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

#include "ntts/attention.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ntts::attention {

using tensor::Sigmoid;

AlignmentState AlignmentState::Initial(std::size_t n_tokens) {
  if (n_tokens == 0) {
    throw std::invalid_argument("AlignmentState: need at least one token");
  }
  AlignmentState s;
  s.alignment.assign(n_tokens, 0.0f);
  s.alignment[0] = 1.0f;
  s.cumulative.assign(n_tokens, 0.0f);
  return s;
}

void AlignmentState::Advance(std::vector<float> next) {
  if (next.size() != cumulative.size()) {
    throw std::invalid_argument("AlignmentState::Advance: length mismatch");
  }
  for (std::size_t i = 0; i < next.size(); ++i) cumulative[i] += next[i];
  alignment = std::move(next);
}

std::optional<AttentionVariant> ParseVariant(std::string_view name) {
  if (name == "ls" || name == "location_sensitive") {
    return AttentionVariant::kLocationSensitive;
  }
  if (name == "mono" || name == "monotonic") return AttentionVariant::kMonotonic;
  if (name == "sma" || name == "stepwise_monotonic") {
    return AttentionVariant::kStepwiseMonotonic;
  }
  return std::nullopt;
}

std::string_view VariantName(AttentionVariant v) {
  switch (v) {
    case AttentionVariant::kLocationSensitive:
      return "location_sensitive";
    case AttentionVariant::kMonotonic:
      return "monotonic";
    case AttentionVariant::kStepwiseMonotonic:
      return "stepwise_monotonic";
  }
  return "unknown";
}

void AttentionWeights::Validate(std::size_t query_dim,
                                std::size_t memory_dim) const {
  const std::size_t d = attn_dim();
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("AttentionWeights: " + what);
  };
  if (d == 0) fail("empty score vector");
  if (score_bias.size() != d) fail("score_bias length");
  if (query_proj.rows() != d || query_proj.cols() != query_dim) {
    fail("query_proj shape");
  }
  if (memory_proj.rows() != d || memory_proj.cols() != memory_dim) {
    fail("memory_proj shape");
  }
  if (location_proj.rows() != d || location_proj.cols() != n_kernels) {
    fail("location_proj shape");
  }
  if (location_kernels.size() != n_kernels * 2 * kernel_width) {
    fail("location_kernels size");
  }
}

ProcessedMemory ProcessMemory(const EncoderMemory& memory,
                              const AttentionWeights& w) {
  if (w.memory_proj.cols() != memory.dim) {
    throw std::invalid_argument("ProcessMemory: memory dim mismatch");
  }
  ProcessedMemory out{memory.n_tokens, w.attn_dim(), {}};
  out.keys.resize(memory.n_tokens * out.attn_dim);
  for (std::size_t i = 0; i < memory.n_tokens; ++i) {
    tensor::MatVecInto(
        w.memory_proj, memory.row(i),
        std::span<float>(out.keys).subspan(i * out.attn_dim, out.attn_dim));
  }
  return out;
}

std::vector<float> Energies(std::span<const float> query,
                            const EncoderMemory& memory,
                            const AlignmentState& state,
                            const AttentionWeights& w) {
  return Energies(query, ProcessMemory(memory, w), state, w);
}

std::vector<float> Energies(std::span<const float> query,
                            const ProcessedMemory& keys,
                            const AlignmentState& state,
                            const AttentionWeights& w) {
  const std::size_t n = keys.n_tokens;
  const std::size_t d = w.attn_dim();
  if (keys.attn_dim != d || state.alignment.size() != n ||
      state.cumulative.size() != n) {
    throw std::invalid_argument("Energies: dimension mismatch");
  }
  if (w.location_kernels.size() != w.n_kernels * 2 * w.kernel_width ||
      w.location_proj.cols() != w.n_kernels || w.score_bias.size() != d) {
    throw std::invalid_argument("Energies: inconsistent attention weights");
  }
  const std::vector<float> q = tensor::MatVec(w.query_proj, query);

  const std::size_t width = w.kernel_width;
  const long long half = static_cast<long long>(width - 1) / 2;
  const std::span<const float> channels[2] = {state.alignment,
                                              state.cumulative};
  std::vector<float> features(w.n_kernels);
  std::vector<float> loc(d);
  std::vector<float> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < w.n_kernels; ++k) {
      float acc = 0.0f;
      for (std::size_t ch = 0; ch < 2; ++ch) {
        const float* kernel = &w.location_kernels[(k * 2 + ch) * width];
        for (std::size_t j = 0; j < width; ++j) {
          const long long src = static_cast<long long>(i + j) - half;
          if (src < 0 || src >= static_cast<long long>(n)) continue;
          acc += kernel[j] * channels[ch][src];
        }
      }
      features[k] = acc;
    }
    tensor::MatVecInto(w.location_proj, features, loc);
    const float* key = &keys.keys[i * d];
    float energy = 0.0f;
    for (std::size_t t = 0; t < d; ++t) {
      energy += w.score_vector[t] *
                std::tanh(q[t] + key[t] + loc[t] + w.score_bias[t]);
    }
    e[i] = energy;
  }
  return e;
}

std::vector<float> StepLocationSensitive(std::span<const float> e) {
  return tensor::Softmax(e);
}

std::vector<float> StepMonotonic(std::span<const float> e,
                                 std::span<const float> prev) {
  if (e.size() != prev.size() || e.empty()) {
    throw std::invalid_argument("StepMonotonic: length mismatch");
  }
  std::vector<float> alpha(e.size());
  double q = 0.0;
  double p_prev = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double p = Sigmoid(e[i]);
    q = (1.0 - p_prev) * q + prev[i];
    alpha[i] = static_cast<float>(p * q);
    p_prev = p;
  }
  return alpha;
}

std::vector<float> StepStepwiseMonotonic(std::span<const float> e,
                                         std::span<const float> prev) {
  if (e.size() != prev.size() || e.empty()) {
    throw std::invalid_argument("StepStepwiseMonotonic: length mismatch");
  }
  const std::size_t n = e.size();
  std::vector<float> alpha(n);
  double moving = 0.0;  // mass handed over from token i-1
  for (std::size_t i = 0; i < n; ++i) {
    const double p = i + 1 == n ? 1.0 : static_cast<double>(Sigmoid(e[i]));
    const double stay = prev[i] * p;
    alpha[i] = static_cast<float>(stay + moving);
    moving = prev[i] * (1.0 - p);
  }
  return alpha;
}

std::vector<float> Step(AttentionVariant variant, std::span<const float> e,
                        std::span<const float> prev) {
  switch (variant) {
    case AttentionVariant::kLocationSensitive:
      return StepLocationSensitive(e);
    case AttentionVariant::kMonotonic:
      return StepMonotonic(e, prev);
    case AttentionVariant::kStepwiseMonotonic:
      return StepStepwiseMonotonic(e, prev);
  }
  throw std::invalid_argument("Step: unknown variant");
}

std::vector<float> Context(std::span<const float> alignment,
                           const EncoderMemory& memory) {
  if (alignment.size() != memory.n_tokens) {
    throw std::invalid_argument("Context: alignment has " +
                                std::to_string(alignment.size()) +
                                " entries for " +
                                std::to_string(memory.n_tokens) + " tokens");
  }
  std::vector<float> ctx(memory.dim, 0.0f);
  for (std::size_t i = 0; i < memory.n_tokens; ++i) {
    const float a = alignment[i];
    if (a == 0.0f) continue;
    const auto row = memory.row(i);
    for (std::size_t j = 0; j < memory.dim; ++j) ctx[j] += a * row[j];
  }
  return ctx;
}

}  // namespace ntts::attention
