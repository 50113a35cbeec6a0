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

// Acoustic frontend: phoneme-token encoder and an autoregressive decoder
// that emits two mel frames per step.

#ifndef NTTS_FRONTEND_H_
#define NTTS_FRONTEND_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ntts/attention.h"
#include "ntts/signal.h"
#include "ntts/tensor.h"

namespace ntts::frontend {

// Token IDs covering phonemes, word boundaries and punctuation.
using PhonemeSequence = std::vector<int>;

struct FrontendConfig {
  int vocab_size = 128;
  int embed_dim = 512;
  int encoder_units = 512;  // per direction
  int decoder_units = 512;
  int prenet_dim0 = 256;
  int prenet_dim1 = 256;
  int frames_per_step = 2;
  int n_mels = 80;
  int max_steps = 0;  // 0: 10 steps per input token
  float stop_threshold = 0.99f;
  int stop_patience = 3;
  int attention_dim = 128;
  int location_kernels = 32;
  int location_kernel_width = 31;
  bool prenet_dropout = false;
  float prenet_dropout_rate = 0.5f;
  std::uint64_t dropout_seed = 0;

  void Validate() const;
  std::size_t memory_dim() const { return 2 * encoder_units; }
  std::size_t frame_values() const { return frames_per_step * n_mels; }
  int MaxSteps(std::size_t n_tokens) const {
    return max_steps > 0 ? max_steps : static_cast<int>(10 * n_tokens);
  }
};

// Gates stacked [input; forget; cell; output], each `units` rows.
struct LstmWeights {
  tensor::Matrix input;      // 4H x in
  tensor::Matrix recurrent;  // 4H x H
  std::vector<float> bias;   // 4H

  std::size_t units() const { return recurrent.cols(); }
};

struct FrontendWeights {
  tensor::Matrix embedding;  // vocab x embed_dim, one row per token
  LstmWeights encoder_fw;
  LstmWeights encoder_bw;
  attention::AttentionWeights attention;
  tensor::Matrix prenet0;  // prenet_dim0 x n_mels
  std::vector<float> prenet0_bias;
  tensor::Matrix prenet1;  // prenet_dim1 x prenet_dim0
  std::vector<float> prenet1_bias;
  LstmWeights decoder;       // input: prenet_dim1 + memory_dim
  tensor::Matrix projection;  // (2 * n_mels) x (decoder_units + memory_dim)
  std::vector<float> projection_bias;

  // Throws std::invalid_argument on any shape inconsistent with `cfg`.
  void Validate(const FrontendConfig& cfg) const;
};

struct DecoderState {
  std::vector<float> h;
  std::vector<float> c;
  std::vector<float> context;
  attention::AlignmentState alignment;
  std::vector<float> prev_frame;
  std::uint64_t step_index = 0;
  // Alignment mass on the final token after each step, for the stop rule.
  std::vector<float> final_mass;

  static DecoderState Initial(const FrontendConfig& cfg, std::size_t n_tokens);

  std::vector<std::uint8_t> Serialize() const;
  // Throws bytes::TruncatedError or std::runtime_error on malformed input.
  static DecoderState Deserialize(std::span<const std::uint8_t> data);

  bool operator==(const DecoderState&) const = default;
};

struct DecoderOutput {
  std::vector<float> frames;  // frames_per_step * n_mels, frame-major
  DecoderState state;
};

// Embedding lookup then one bidirectional LSTM layer; rows are
// [forward; backward] outputs. Throws std::out_of_range for unknown tokens.
attention::EncoderMemory Encode(const PhonemeSequence& seq,
                                const FrontendWeights& w,
                                const FrontendConfig& cfg);

// Per-utterance decoding context: the encoder memory plus its projected
// attention keys, which stay fixed across decoder steps.
struct DecodeContext {
  attention::EncoderMemory memory;
  attention::ProcessedMemory keys;

  static DecodeContext Build(attention::EncoderMemory memory,
                             const FrontendWeights& w);
};

DecoderOutput DecoderStep(const DecoderState& state, const DecodeContext& ctx,
                          const FrontendWeights& w, const FrontendConfig& cfg,
                          attention::AttentionVariant variant);
// Convenience form that projects the memory keys on every call.
DecoderOutput DecoderStep(const DecoderState& state,
                          const attention::EncoderMemory& memory,
                          const FrontendWeights& w, const FrontendConfig& cfg,
                          attention::AttentionVariant variant);

bool ShouldStop(const DecoderState& state, const FrontendConfig& cfg);

struct FrontendTrace {
  std::size_t steps = 0;
  std::vector<std::vector<float>> alignments;  // one per step
};

signal::MelSpectrogram RunFrontend(const PhonemeSequence& seq,
                                   const FrontendWeights& w,
                                   const FrontendConfig& cfg,
                                   attention::AttentionVariant variant,
                                   FrontendTrace* trace = nullptr);

}  // namespace ntts::frontend

#endif  // NTTS_FRONTEND_H_
