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

#include "ntts/frontend.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ntts/bytes.h"
#include "ntts/rng.h"

namespace ntts::frontend {
namespace {

using tensor::Matrix;
using tensor::Relu;
using tensor::Sigmoid;
using tensor::Tanh;

constexpr char kStateMagic[] = "NTTSD01";

void CheckShape(const Matrix& m, std::size_t rows, std::size_t cols,
                const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(
        std::string("FrontendWeights: ") + name + " is " +
        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
        ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void CheckLength(std::span<const float> v, std::size_t n, const char* name) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string("FrontendWeights: ") + name +
                                " has " + std::to_string(v.size()) +
                                " values, expected " + std::to_string(n));
  }
}

void CheckLstm(const LstmWeights& l, std::size_t in, std::size_t units,
               const char* name) {
  CheckShape(l.input, 4 * units, in, name);
  CheckShape(l.recurrent, 4 * units, units, name);
  CheckLength(l.bias, 4 * units, name);
}

// One LSTM update in place. `scratch` must hold 2 * 4H floats.
void LstmStep(const LstmWeights& w, std::span<const float> x,
              std::span<float> h, std::span<float> c,
              std::vector<float>& scratch) {
  const std::size_t units = h.size();
  scratch.resize(8 * units);
  std::span<float> gates(scratch.data(), 4 * units);
  std::span<float> rec(scratch.data() + 4 * units, 4 * units);
  tensor::MatVecInto(w.input, x, gates);
  tensor::MatVecInto(w.recurrent, h, rec);
  for (std::size_t k = 0; k < 4 * units; ++k) gates[k] += rec[k] + w.bias[k];
  for (std::size_t j = 0; j < units; ++j) {
    const float i = Sigmoid(gates[j]);
    const float f = Sigmoid(gates[units + j]);
    const float g = Tanh(gates[2 * units + j]);
    const float o = Sigmoid(gates[3 * units + j]);
    c[j] = f * c[j] + i * g;
    h[j] = o * Tanh(c[j]);
  }
}

// Inverted dropout with a mask derived from (seed, step, layer).
void PrenetDropout(std::span<float> v, const FrontendConfig& cfg,
                   std::uint64_t step, int layer) {
  rng::SplitMix64 gen(rng::Derive(cfg.dropout_seed, step, layer));
  const float keep = 1.0f - cfg.prenet_dropout_rate;
  for (float& x : v) {
    x = gen.UniformDouble() < keep ? x / keep : 0.0f;
  }
}

}  // namespace

void FrontendConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("frontend: " + what);
  };
  if (frames_per_step != 2) fail("frames_per_step must be 2");
  if (vocab_size <= 0 || embed_dim <= 0 || encoder_units <= 0 ||
      decoder_units <= 0 || prenet_dim0 <= 0 || prenet_dim1 <= 0 ||
      n_mels <= 0 || attention_dim <= 0 || location_kernels <= 0 ||
      location_kernel_width <= 0) {
    fail("sizes must be positive");
  }
  if (!(stop_threshold > 0.0f && stop_threshold < 1.0f)) {
    fail("stop_threshold must be in (0, 1)");
  }
  if (stop_patience < 1) fail("stop_patience must be >= 1");
  if (max_steps < 0) fail("max_steps must be >= 0");
  if (!(prenet_dropout_rate >= 0.0f && prenet_dropout_rate < 1.0f)) {
    fail("prenet_dropout_rate must be in [0, 1)");
  }
}

void FrontendWeights::Validate(const FrontendConfig& cfg) const {
  const std::size_t mem = cfg.memory_dim();
  CheckShape(embedding, cfg.vocab_size, cfg.embed_dim, "embedding");
  CheckLstm(encoder_fw, cfg.embed_dim, cfg.encoder_units, "encoder_fw");
  CheckLstm(encoder_bw, cfg.embed_dim, cfg.encoder_units, "encoder_bw");
  attention.Validate(cfg.decoder_units, mem);
  if (attention.attn_dim() != static_cast<std::size_t>(cfg.attention_dim) ||
      attention.n_kernels != static_cast<std::size_t>(cfg.location_kernels) ||
      attention.kernel_width !=
          static_cast<std::size_t>(cfg.location_kernel_width)) {
    throw std::invalid_argument("FrontendWeights: attention sizes");
  }
  CheckShape(prenet0, cfg.prenet_dim0, cfg.n_mels, "prenet0");
  CheckLength(prenet0_bias, cfg.prenet_dim0, "prenet0_bias");
  CheckShape(prenet1, cfg.prenet_dim1, cfg.prenet_dim0, "prenet1");
  CheckLength(prenet1_bias, cfg.prenet_dim1, "prenet1_bias");
  CheckLstm(decoder, cfg.prenet_dim1 + mem, cfg.decoder_units, "decoder");
  CheckShape(projection, cfg.frame_values(), cfg.decoder_units + mem,
             "projection");
  CheckLength(projection_bias, cfg.frame_values(), "projection_bias");
}

DecoderState DecoderState::Initial(const FrontendConfig& cfg,
                                   std::size_t n_tokens) {
  DecoderState s;
  s.h.assign(cfg.decoder_units, 0.0f);
  s.c.assign(cfg.decoder_units, 0.0f);
  s.context.assign(cfg.memory_dim(), 0.0f);
  s.alignment = attention::AlignmentState::Initial(n_tokens);
  s.prev_frame.assign(cfg.n_mels, 0.0f);
  return s;
}

std::vector<std::uint8_t> DecoderState::Serialize() const {
  bytes::Writer w;
  w.Raw(kStateMagic, 7);
  w.U64(step_index);
  w.FloatVec(h);
  w.FloatVec(c);
  w.FloatVec(context);
  w.FloatVec(alignment.alignment);
  w.FloatVec(alignment.cumulative);
  w.FloatVec(prev_frame);
  w.FloatVec(final_mass);
  return w.Take();
}

DecoderState DecoderState::Deserialize(std::span<const std::uint8_t> data) {
  bytes::Reader r(data);
  if (r.Str(7) != std::string(kStateMagic, 7)) {
    throw std::runtime_error("DecoderState: bad magic");
  }
  DecoderState s;
  s.step_index = r.U64();
  s.h = r.FloatVec();
  s.c = r.FloatVec();
  s.context = r.FloatVec();
  s.alignment.alignment = r.FloatVec();
  s.alignment.cumulative = r.FloatVec();
  s.prev_frame = r.FloatVec();
  s.final_mass = r.FloatVec();
  if (r.remaining() != 0) {
    throw std::runtime_error("DecoderState: trailing bytes");
  }
  if (s.h.size() != s.c.size() ||
      s.alignment.alignment.size() != s.alignment.cumulative.size()) {
    throw std::runtime_error("DecoderState: inconsistent sizes");
  }
  return s;
}

attention::EncoderMemory Encode(const PhonemeSequence& seq,
                                const FrontendWeights& w,
                                const FrontendConfig& cfg) {
  if (seq.empty()) throw std::invalid_argument("Encode: empty sequence");
  const std::size_t n = seq.size();
  const std::size_t units = cfg.encoder_units;
  const std::size_t embed = cfg.embed_dim;
  std::vector<float> embedded(n * embed);
  for (std::size_t t = 0; t < n; ++t) {
    const int id = seq[t];
    if (id < 0 || id >= cfg.vocab_size) {
      throw std::out_of_range("Encode: token " + std::to_string(id) +
                              " outside vocabulary of " +
                              std::to_string(cfg.vocab_size));
    }
    for (std::size_t j = 0; j < embed; ++j) {
      embedded[t * embed + j] = w.embedding.at(id, j);
    }
  }

  attention::EncoderMemory memory{n, 2 * units, {}};
  memory.values.assign(n * 2 * units, 0.0f);
  std::vector<float> h(units), c(units), scratch;
  auto run = [&](const LstmWeights& lstm, bool backward) {
    std::fill(h.begin(), h.end(), 0.0f);
    std::fill(c.begin(), c.end(), 0.0f);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t t = backward ? n - 1 - k : k;
      LstmStep(lstm, std::span<const float>(embedded).subspan(t * embed, embed),
               h, c, scratch);
      std::copy(h.begin(), h.end(),
                memory.values.begin() + t * 2 * units + (backward ? units : 0));
    }
  };
  run(w.encoder_fw, false);
  run(w.encoder_bw, true);
  return memory;
}

DecodeContext DecodeContext::Build(attention::EncoderMemory memory,
                                   const FrontendWeights& w) {
  DecodeContext ctx;
  ctx.keys = attention::ProcessMemory(memory, w.attention);
  ctx.memory = std::move(memory);
  return ctx;
}

DecoderOutput DecoderStep(const DecoderState& state, const DecodeContext& ctx,
                          const FrontendWeights& w, const FrontendConfig& cfg,
                          attention::AttentionVariant variant) {
  const std::size_t mem_dim = ctx.memory.dim;
  if (state.prev_frame.size() != static_cast<std::size_t>(cfg.n_mels) ||
      state.context.size() != mem_dim ||
      state.h.size() != static_cast<std::size_t>(cfg.decoder_units) ||
      state.alignment.alignment.size() != ctx.memory.n_tokens) {
    throw std::invalid_argument("DecoderStep: state inconsistent with memory");
  }
  DecoderOutput out{{}, state};
  DecoderState& next = out.state;

  std::vector<float> pre0 = tensor::Affine(w.prenet0, state.prev_frame,
                                           w.prenet0_bias);
  tensor::ActivateInPlace(pre0, tensor::Activation::kRelu);
  if (cfg.prenet_dropout) PrenetDropout(pre0, cfg, state.step_index, 0);
  std::vector<float> pre1 = tensor::Affine(w.prenet1, pre0, w.prenet1_bias);
  tensor::ActivateInPlace(pre1, tensor::Activation::kRelu);
  if (cfg.prenet_dropout) PrenetDropout(pre1, cfg, state.step_index, 1);

  std::vector<float> input(pre1);
  input.insert(input.end(), state.context.begin(), state.context.end());
  std::vector<float> scratch;
  LstmStep(w.decoder, input, next.h, next.c, scratch);

  const std::vector<float> e =
      attention::Energies(next.h, ctx.keys, state.alignment, w.attention);
  next.alignment.Advance(
      attention::Step(variant, e, state.alignment.alignment));
  next.context = attention::Context(next.alignment.alignment, ctx.memory);

  std::vector<float> joined(next.h);
  joined.insert(joined.end(), next.context.begin(), next.context.end());
  out.frames = tensor::Affine(w.projection, joined, w.projection_bias);

  next.prev_frame.assign(out.frames.end() - cfg.n_mels, out.frames.end());
  next.final_mass.push_back(next.alignment.alignment.back());
  ++next.step_index;
  return out;
}

DecoderOutput DecoderStep(const DecoderState& state,
                          const attention::EncoderMemory& memory,
                          const FrontendWeights& w, const FrontendConfig& cfg,
                          attention::AttentionVariant variant) {
  return DecoderStep(state, DecodeContext::Build(memory, w), w, cfg, variant);
}

bool ShouldStop(const DecoderState& state, const FrontendConfig& cfg) {
  const std::size_t n_tokens = state.alignment.alignment.size();
  if (state.step_index >= static_cast<std::uint64_t>(cfg.MaxSteps(n_tokens))) {
    return true;
  }
  const std::size_t patience = cfg.stop_patience;
  if (state.final_mass.size() < patience) return false;
  return std::all_of(state.final_mass.end() - patience, state.final_mass.end(),
                     [&](float m) { return m > cfg.stop_threshold; });
}

signal::MelSpectrogram RunFrontend(const PhonemeSequence& seq,
                                   const FrontendWeights& w,
                                   const FrontendConfig& cfg,
                                   attention::AttentionVariant variant,
                                   FrontendTrace* trace) {
  const DecodeContext ctx = DecodeContext::Build(Encode(seq, w, cfg), w);
  DecoderState state = DecoderState::Initial(cfg, seq.size());
  signal::MelSpectrogram mel;
  mel.n_mels = cfg.n_mels;
  while (!ShouldStop(state, cfg)) {
    DecoderOutput step = DecoderStep(state, ctx, w, cfg, variant);
    mel.values.insert(mel.values.end(), step.frames.begin(), step.frames.end());
    state = std::move(step.state);
    if (trace != nullptr) {
      ++trace->steps;
      trace->alignments.push_back(state.alignment.alignment);
    }
  }
  return mel;
}

}  // namespace ntts::frontend
