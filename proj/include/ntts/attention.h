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

#ifndef NTTS_ATTENTION_H_
#define NTTS_ATTENTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ntts/tensor.h"

namespace ntts::attention {

// Encoder outputs, one row of `dim` values per input token.
struct EncoderMemory {
  std::size_t n_tokens = 0;
  std::size_t dim = 0;
  std::vector<float> values;

  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(values).subspan(i * dim, dim);
  }
};

struct AlignmentState {
  std::vector<float> alignment;   // current alignment over tokens
  std::vector<float> cumulative;  // sum of every alignment produced so far

  // One-hot at token 0, zero cumulative.
  static AlignmentState Initial(std::size_t n_tokens);
  // Installs `next` as the current alignment and accumulates it.
  void Advance(std::vector<float> next);

  bool operator==(const AlignmentState&) const = default;
};

enum class AttentionVariant { kLocationSensitive, kMonotonic, kStepwiseMonotonic };

// Accepts "ls", "mono", "sma" and the long names.
std::optional<AttentionVariant> ParseVariant(std::string_view name);
std::string_view VariantName(AttentionVariant v);

// Energy-function parameters. Location kernels convolve two channels
// (current and cumulative alignment) and are laid out
// [n_kernels][2][kernel_width].
struct AttentionWeights {
  tensor::Matrix query_proj;     // attn_dim x query_dim
  tensor::Matrix memory_proj;    // attn_dim x memory_dim
  tensor::Matrix location_proj;  // attn_dim x n_kernels
  std::vector<float> location_kernels;
  std::size_t n_kernels = 0;
  std::size_t kernel_width = 0;
  std::vector<float> score_vector;  // attn_dim
  std::vector<float> score_bias;    // attn_dim

  std::size_t attn_dim() const { return score_vector.size(); }
  // Throws std::invalid_argument if shapes disagree.
  void Validate(std::size_t query_dim, std::size_t memory_dim) const;
};

// memory_proj applied to every memory row; fixed for an utterance.
struct ProcessedMemory {
  std::size_t n_tokens = 0;
  std::size_t attn_dim = 0;
  std::vector<float> keys;  // n_tokens x attn_dim
};

ProcessedMemory ProcessMemory(const EncoderMemory& memory,
                              const AttentionWeights& w);

// e_i = v . tanh(Wq q + Wm h_i + Wl f_i + b), with f the zero-padded
// same-length convolution of [alignment; cumulative] with the kernels.
std::vector<float> Energies(std::span<const float> query,
                            const EncoderMemory& memory,
                            const AlignmentState& state,
                            const AttentionWeights& w);
std::vector<float> Energies(std::span<const float> query,
                            const ProcessedMemory& keys,
                            const AlignmentState& state,
                            const AttentionWeights& w);

// Location-sensitive content attention: softmax over energies.
std::vector<float> StepLocationSensitive(std::span<const float> e);

// Soft monotonic recursion. Mass that moves past the final token is lost, so
// the output never carries more mass than `prev`.
std::vector<float> StepMonotonic(std::span<const float> e,
                                 std::span<const float> prev);

// Stepwise monotonic: each token either keeps its mass (probability p_i) or
// hands it to the next token. p is forced to 1 at the final token, so mass is
// conserved and the support advances by at most one index per step.
std::vector<float> StepStepwiseMonotonic(std::span<const float> e,
                                         std::span<const float> prev);

std::vector<float> Step(AttentionVariant variant, std::span<const float> e,
                        std::span<const float> prev);

// sum_i alignment_i * memory_i
std::vector<float> Context(std::span<const float> alignment,
                           const EncoderMemory& memory);

}  // namespace ntts::attention

#endif  // NTTS_ATTENTION_H_
