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

#include "ntts/vocoder.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "ntts/rng.h"

namespace ntts::vocoder {
namespace {

using tensor::Matrix;
using tensor::Relu;
using tensor::Sigmoid;
using tensor::Tanh;

constexpr std::uint64_t kNoiseStream = 0x6e6f697365ULL;

void Require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void CheckMatrix(const Matrix& m, std::size_t rows, std::size_t cols,
                 const char* name) {
  Require(m.rows() == rows && m.cols() == cols,
          std::string("vocoder weights: ") + name + " is " +
              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
              ", expected " + std::to_string(rows) + "x" +
              std::to_string(cols));
}

void CheckVector(std::span<const float> v, std::size_t n, const char* name) {
  Require(v.size() == n, std::string("vocoder weights: ") + name + " has " +
                             std::to_string(v.size()) + " values, expected " +
                             std::to_string(n));
}

void CheckHead(const Head& head, std::size_t in, const VocoderConfig& cfg,
               const char* name) {
  CheckMatrix(head.fc1, cfg.head_hidden, in, name);
  CheckVector(head.fc1_bias, cfg.head_hidden, name);
  CheckMatrix(head.fc2, cfg.classes, cfg.head_hidden, name);
  CheckVector(head.fc2_bias, cfg.classes, name);
}

std::span<const float> EmbeddingRow(const Matrix& table, int code) {
  // Tables are stored row-major, so a row is contiguous.
  return table.data().subspan(static_cast<std::size_t>(code) * table.cols(),
                              table.cols());
}

const std::array<float, 256>& MulawTable() {
  static const std::array<float, 256> table = [] {
    std::array<float, 256> t{};
    for (int c = 0; c < 256; ++c) t[c] = signal::MulawDecode(c);
    return t;
  }();
  return table;
}

// Naive logical-matrix product with the same accumulation order as
// tensor::MatVec.
float NaiveRow(const Matrix& m, std::size_t row, std::span<const float> v) {
  float acc = 0.0f;
  for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(row, c) * v[c];
  return acc;
}

std::vector<float> NaiveProduct(const Matrix& m, std::span<const float> v,
                                tensor::OpCounters* counters) {
  std::vector<float> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = NaiveRow(m, r, v);
  if (counters != nullptr) {
    ++counters->matvec_count;
    counters->matvec_macs += static_cast<std::uint64_t>(m.rows()) * m.cols();
  }
  return out;
}

int NaiveHeadSample(const Head& head, std::span<const float> h,
                    std::span<const float> g, VocoderCounters* counters) {
  tensor::OpCounters* hc = counters ? &counters->head : nullptr;
  std::vector<float> hidden = NaiveProduct(head.fc1, h, hc);
  for (std::size_t i = 0; i < hidden.size(); ++i) {
    hidden[i] = Relu(hidden[i] + head.fc1_bias[i]);
  }
  std::vector<float> logits = NaiveProduct(head.fc2, hidden, hc);
  for (std::size_t i = 0; i < logits.size(); ++i) logits[i] += head.fc2_bias[i];
  if (counters != nullptr) ++counters->head.head_evals;
  int best = 0;
  float best_value = logits[0] + g[0];
  for (std::size_t i = 1; i < logits.size(); ++i) {
    const float v = logits[i] + g[i];
    if (v > best_value) {
      best_value = v;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

void VocoderConfig::Validate() const {
  Require(hidden > 0 && hidden % 2 == 0, "vocoder.hidden must be even");
  Require(classes == 256, "vocoder.classes must be 256");
  Require(samples_per_frame == 2 * pairs_per_frame,
          "vocoder.samples_per_frame must be 2 * pairs_per_frame");
  Require(pairs_per_frame > 0 && embed_dim > 0 && head_hidden > 0 &&
              n_mels > 0,
          "vocoder sizes must be positive");
}

void VocoderWeights::Validate(const VocoderConfig& cfg) const {
  const std::size_t half = cfg.half();
  CheckMatrix(embedding, cfg.classes, cfg.embed_dim, "embedding");
  Require(embedding.layout() == tensor::Layout::kRowMajor,
          "vocoder weights: embedding must be row-major");
  CheckMatrix(input_a, 3 * half, cfg.embed_dim, "input_a");
  CheckMatrix(input_b, 3 * half, cfg.embed_dim, "input_b");
  CheckMatrix(recurrent, cfg.gate_rows(), cfg.hidden, "recurrent");
  CheckVector(gate_bias, cfg.gate_rows(), "gate_bias");
  CheckMatrix(conditioning, cfg.gate_rows(), cfg.n_mels, "conditioning");
  CheckVector(conditioning_bias, cfg.gate_rows(), "conditioning_bias");
  CheckHead(head_a, half, cfg, "head_a");
  CheckHead(head_b, half, cfg, "head_b");
}

void BaselineWeights::Validate(const VocoderConfig& cfg) const {
  CheckMatrix(embedding, cfg.classes, cfg.embed_dim, "baseline embedding");
  Require(embedding.layout() == tensor::Layout::kRowMajor,
          "baseline weights: embedding must be row-major");
  CheckMatrix(input, cfg.gate_rows(), cfg.embed_dim, "baseline input");
  CheckMatrix(recurrent, cfg.gate_rows(), cfg.hidden, "baseline recurrent");
  CheckVector(gate_bias, cfg.gate_rows(), "baseline gate_bias");
  CheckMatrix(conditioning, cfg.gate_rows(), cfg.n_mels,
              "baseline conditioning");
  CheckVector(conditioning_bias, cfg.gate_rows(), "baseline conditioning_bias");
  CheckHead(head, cfg.hidden, cfg, "baseline head");
}

VocoderState VocoderState::Initial(const VocoderConfig& cfg) {
  VocoderState s;
  s.h.assign(cfg.hidden, 0.0f);
  s.cached_l.assign(cfg.gate_rows(), 0.0f);
  return s;
}

VocoderCounters& VocoderCounters::operator+=(const VocoderCounters& other) {
  recurrent += other.recurrent;
  conditioning += other.conditioning;
  input += other.input;
  head += other.head;
  return *this;
}

std::span<const float> NoiseBuffer::Take(std::size_t n) {
  if (n > remaining()) {
    throw NoiseExhaustedError("noise buffer exhausted: need " +
                              std::to_string(n) + ", have " +
                              std::to_string(remaining()));
  }
  std::span<const float> out(values_.data() + cursor_, n);
  cursor_ += n;
  return out;
}

void FillGumbel(std::span<float> out, std::uint64_t seed,
                std::uint64_t frame_index) {
  rng::SplitMix64 gen(rng::Derive(seed, frame_index, kNoiseStream));
  for (float& g : out) g = gen.UniformOpen();
  for (float& g : out) g = -tensor::Log(-tensor::Log(g));
}

NoiseBuffer FrameNoise(const VocoderConfig& cfg, std::uint64_t seed,
                       std::uint64_t frame_index) {
  std::vector<float> values(cfg.noise_per_frame());
  FillGumbel(values, seed, frame_index);
  return NoiseBuffer(std::move(values));
}

NoiseStream::NoiseStream(const VocoderConfig& cfg, std::uint64_t seed,
                         std::uint64_t first_frame, bool prefetch)
    : cfg_(cfg), seed_(seed), next_frame_(first_frame), prefetch_(prefetch) {}

NoiseStream::~NoiseStream() {
  if (pending_) pending_->wait();
}

NoiseBuffer NoiseStream::Next() {
  NoiseBuffer current = pending_ ? pending_->get()
                                 : FrameNoise(cfg_, seed_, next_frame_);
  pending_.reset();
  ++next_frame_;
  if (prefetch_) {
    pending_ = std::async(std::launch::async,
                          [cfg = cfg_, seed = seed_, frame = next_frame_] {
                            return FrameNoise(cfg, seed, frame);
                          });
  }
  return current;
}

unsigned AvailableWorkers() {
  if (const char* env = std::getenv("NTTS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int GumbelMax(std::span<const float> logits, std::span<const float> g) {
  Require(!logits.empty() && g.size() >= logits.size(),
          "GumbelMax: need one noise value per logit");
  int best = 0;
  float best_value = logits[0] + g[0];
  for (std::size_t i = 1; i < logits.size(); ++i) {
    const float v = logits[i] + g[i];
    if (v > best_value) {
      best_value = v;
      best = static_cast<int>(i);
    }
  }
  return best;
}

int GumbelMaxOnProbabilities(std::span<const float> logits,
                             std::span<const float> g) {
  return GumbelMax(tensor::Softmax(logits), g);
}

int CdfSample(std::span<const float> probs, double u) {
  Require(!probs.empty(), "CdfSample: empty distribution");
  double total = 0.0;
  for (float p : probs) {
    Require(std::isfinite(p) && p >= 0.0f,
            "CdfSample: probabilities must be finite and non-negative");
    total += p;
  }
  Require(std::abs(total - 1.0) <= 1e-6, "CdfSample: probabilities sum to " +
                                             std::to_string(total));
  double running = 0.0;
  int last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0f) last_nonzero = static_cast<int>(i);
    running += probs[i];
    if (running > u && probs[i] > 0.0f) return static_cast<int>(i);
  }
  return last_nonzero;
}

std::vector<float> ConditionFrame(std::span<const float> frame,
                                  const VocoderWeights& w,
                                  tensor::OpCounters* counters) {
  return tensor::Affine(w.conditioning, frame, w.conditioning_bias, counters);
}

namespace {

// h' = z * h + (1 - z) * n over n units. Gate rows z, r and n sit
// `gate_stride` apart in l, c and b, and `x_stride` apart in x.
void GateUpdate(const float* __restrict l, const float* __restrict c,
                const float* __restrict b, const float* __restrict x,
                float* __restrict h, std::size_t n, std::size_t gate_stride,
                std::size_t x_stride) {
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t ir = gate_stride + j;
    const std::size_t in = 2 * gate_stride + j;
    const float z = Sigmoid(((l[j] + c[j]) + b[j]) + x[j]);
    const float r = Sigmoid(((l[ir] + c[ir]) + b[ir]) + x[x_stride + j]);
    const float g = Tanh(((r * l[in] + c[in]) + b[in]) + x[2 * x_stride + j]);
    h[j] = z * h[j] + (1.0f - z) * g;
  }
}

}  // namespace

InputProjection::InputProjection(const tensor::Matrix& input,
                                 const tensor::Matrix& embedding)
    : input_(input),
      embedding_(embedding),
      table_(embedding.rows() * input.rows()),
      ready_(embedding.rows(), false) {}

std::span<const float> InputProjection::Row(int code,
                                            tensor::OpCounters* counters) {
  const std::size_t n = input_.rows();
  const std::span<float> row(table_.data() + static_cast<std::size_t>(code) * n,
                             n);
  if (!ready_.at(code)) {
    tensor::MatVecInto(input_, EmbeddingRow(embedding_, code), row, counters);
    ready_[code] = true;
  }
  return row;
}

SplitStateKernel::SplitStateKernel(const VocoderWeights& w,
                                   const VocoderConfig& cfg,
                                   GumbelInput gumbel_input)
    : w_(w),
      cfg_(cfg),
      gumbel_input_(gumbel_input),
      input_a_(w.input_a, w.embedding),
      input_b_(w.input_b, w.embedding),
      hidden_(cfg.head_hidden),
      logits_(cfg.classes),
      cond_(cfg.gate_rows()) {
  cfg_.Validate();
  w_.Validate(cfg_);
}

void SplitStateKernel::HalfStep(VocoderState& state,
                                std::span<const float> cond,
                                std::size_t offset, InputProjection& input,
                                int code) {
  const std::size_t half = cfg_.half();
  const std::size_t block = cfg_.hidden;
  const std::span<const float> x = input.Row(code, &counters_.input);
  GateUpdate(state.cached_l.data() + offset, cond.data() + offset,
             w_.gate_bias.data() + offset, x.data(), state.h.data() + offset,
             half, block, half);
}

int SplitStateKernel::Sample(const Head& head, std::span<const float> h,
                             NoiseBuffer& noise) {
  tensor::MatVecInto(head.fc1, h, hidden_, &counters_.head);
  for (std::size_t i = 0; i < hidden_.size(); ++i) {
    hidden_[i] = Relu(hidden_[i] + head.fc1_bias[i]);
  }
  tensor::MatVecInto(head.fc2, hidden_, logits_, &counters_.head);
  for (std::size_t i = 0; i < logits_.size(); ++i) logits_[i] += head.fc2_bias[i];
  ++counters_.head.head_evals;
  const std::span<const float> g = noise.Take(cfg_.classes);
  return gumbel_input_ == GumbelInput::kLogits
             ? GumbelMax(logits_, g)
             : GumbelMaxOnProbabilities(logits_, g);
}

SampledPair SplitStateKernel::Pair(VocoderState& state,
                                   std::span<const float> cond,
                                   NoiseBuffer& noise) {
  if (noise.remaining() < 2 * static_cast<std::size_t>(cfg_.classes)) {
    throw NoiseExhaustedError("split-state pair needs " +
                              std::to_string(2 * cfg_.classes) +
                              " noise values, have " +
                              std::to_string(noise.remaining()));
  }
  Require(cond.size() == cfg_.gate_rows() &&
              state.h.size() == static_cast<std::size_t>(cfg_.hidden),
          "split-state pair: state or conditioning size mismatch");
  state.cached_l.resize(cfg_.gate_rows());
  tensor::MatVecInto(w_.recurrent, state.h, state.cached_l,
                     &counters_.recurrent);
  state.l_valid = true;

  const std::size_t half = cfg_.half();
  const std::span<const float> h(state.h);
  SampledPair out;
  HalfStep(state, cond, 0, input_a_, state.prev_code);
  out.first = Sample(w_.head_a, h.subspan(0, half), noise);
  HalfStep(state, cond, half, input_b_, out.first);
  out.second = Sample(w_.head_b, h.subspan(half, half), noise);

  state.prev_code = out.second;
  state.l_valid = false;  // h moved on; L belongs to the previous state
  return out;
}

void SplitStateKernel::SynthFrame(VocoderState& state,
                                  std::span<const float> frame,
                                  std::int64_t frame_index, NoiseBuffer& noise,
                                  bool cache_conditioning,
                                  std::span<std::uint8_t> codes) {
  Require(frame.size() == static_cast<std::size_t>(cfg_.n_mels),
          "SynthFrame: frame has " + std::to_string(frame.size()) +
              " values, expected " + std::to_string(cfg_.n_mels));
  Require(codes.size() == static_cast<std::size_t>(cfg_.samples_per_frame),
          "SynthFrame: output span size");
  auto condition = [&](std::vector<float>& out) {
    out.resize(cfg_.gate_rows());
    tensor::MatVecInto(w_.conditioning, frame, out, &counters_.conditioning);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += w_.conditioning_bias[i];
    }
  };
  if (cache_conditioning && state.cond_frame != frame_index) {
    condition(state.cached_cond);
    state.cond_frame = frame_index;
  }
  for (int p = 0; p < cfg_.pairs_per_frame; ++p) {
    if (!cache_conditioning) condition(cond_);
    const SampledPair pair =
        Pair(state, cache_conditioning ? state.cached_cond : cond_, noise);
    codes[2 * p] = static_cast<std::uint8_t>(pair.first);
    codes[2 * p + 1] = static_cast<std::uint8_t>(pair.second);
  }
}

SampledPair SplitStatePair(VocoderState& state, std::span<const float> cond,
                           const VocoderWeights& w, const VocoderConfig& cfg,
                           NoiseBuffer& noise, VocoderCounters* counters) {
  SplitStateKernel kernel(w, cfg);
  const SampledPair out = kernel.Pair(state, cond, noise);
  if (counters != nullptr) *counters += kernel.counters();
  return out;
}

SampledPair ReferencePair(VocoderState& state, std::span<const float> cond,
                          const VocoderWeights& w, const VocoderConfig& cfg,
                          NoiseBuffer& noise, VocoderCounters* counters) {
  cfg.Validate();
  w.Validate(cfg);
  const std::size_t classes = cfg.classes;
  if (noise.remaining() < 2 * classes) {
    throw NoiseExhaustedError("reference pair: noise exhausted");
  }
  Require(cond.size() == cfg.gate_rows() &&
              state.h.size() == static_cast<std::size_t>(cfg.hidden),
          "reference pair: state or conditioning size mismatch");
  const std::size_t half = cfg.half();
  const std::size_t block = cfg.hidden;
  const std::vector<float> h0 = state.h;
  std::vector<float> h1 = h0;
  tensor::OpCounters* rc = counters ? &counters->recurrent : nullptr;
  tensor::OpCounters* ic = counters ? &counters->input : nullptr;

  std::vector<float> l;
  auto half_step = [&](std::size_t offset, const Matrix& input, int code) {
    // Fresh recurrent product over the pre-update state for every half.
    l = NaiveProduct(w.recurrent, h0, rc);
    std::span<const float> emb = EmbeddingRow(w.embedding, code);
    const std::vector<float> x = NaiveProduct(input, emb, ic);
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t iz = offset + j;
      const std::size_t ir = block + offset + j;
      const std::size_t in = 2 * block + offset + j;
      const float gz = ((l[iz] + cond[iz]) + w.gate_bias[iz]) + x[j];
      const float gr = ((l[ir] + cond[ir]) + w.gate_bias[ir]) + x[half + j];
      const float z = Sigmoid(gz);
      const float r = Sigmoid(gr);
      const float n =
          Tanh(((r * l[in] + cond[in]) + w.gate_bias[in]) + x[2 * half + j]);
      h1[iz] = z * h0[iz] + (1.0f - z) * n;
    }
  };

  SampledPair out;
  half_step(0, w.input_a, state.prev_code);
  out.first = NaiveHeadSample(
      w.head_a, std::span<const float>(h1).subspan(0, half),
      noise.Take(classes), counters);
  half_step(half, w.input_b, out.first);
  out.second = NaiveHeadSample(
      w.head_b, std::span<const float>(h1).subspan(half, half),
      noise.Take(classes), counters);

  state.cached_l = std::move(l);
  state.l_valid = false;
  state.h = std::move(h1);
  state.prev_code = out.second;
  return out;
}

std::vector<std::uint8_t> SynthFrame(VocoderState& state,
                                     std::span<const float> frame,
                                     std::int64_t frame_index,
                                     const VocoderWeights& w,
                                     const VocoderConfig& cfg,
                                     NoiseBuffer& noise,
                                     bool cache_conditioning,
                                     VocoderCounters* counters) {
  SplitStateKernel kernel(w, cfg);
  std::vector<std::uint8_t> codes(cfg.samples_per_frame);
  kernel.SynthFrame(state, frame, frame_index, noise, cache_conditioning,
                    codes);
  if (counters != nullptr) *counters += kernel.counters();
  return codes;
}

VocoderSession::VocoderSession(const VocoderWeights& w,
                               const VocoderConfig& cfg,
                               const signal::SignalConfig& sig,
                               std::uint64_t seed, SynthOptions options)
    : cfg_(cfg),
      options_(options),
      kernel_(w, cfg, options.gumbel_input),
      state_(VocoderState::Initial(cfg)),
      noise_(cfg, seed, 0,
             options.prefetch_noise.value_or(AvailableWorkers() > 3)),
      deemphasis_(sig.preemphasis),
      codes_(cfg.samples_per_frame) {}

std::vector<float> VocoderSession::Process(std::span<const float> frames) {
  const std::size_t n_mels = cfg_.n_mels;
  Require(frames.size() % n_mels == 0,
          "VocoderSession: input is not a whole number of frames");
  const std::size_t n_frames = frames.size() / n_mels;
  const auto& table = MulawTable();
  std::vector<float> audio;
  audio.reserve(n_frames * cfg_.samples_per_frame);
  for (std::size_t f = 0; f < n_frames; ++f) {
    NoiseBuffer noise = noise_.Next();
    kernel_.SynthFrame(state_, frames.subspan(f * n_mels, n_mels),
                       static_cast<std::int64_t>(frames_done_), noise,
                       options_.cache_conditioning, codes_);
    for (std::uint8_t code : codes_) audio.push_back(table[code]);
    ++frames_done_;
  }
  deemphasis_.Process(audio);
  return audio;
}

signal::AudioBuffer Synth(const signal::MelSpectrogram& mel,
                          const VocoderWeights& w, const VocoderConfig& cfg,
                          const signal::SignalConfig& sig, std::uint64_t seed,
                          SynthOptions options, VocoderCounters* counters) {
  Require(mel.n_mels == static_cast<std::size_t>(cfg.n_mels),
          "Synth: mel has " + std::to_string(mel.n_mels) + " bins, expected " +
              std::to_string(cfg.n_mels));
  VocoderSession session(w, cfg, sig, seed, options);
  signal::AudioBuffer out{sig.sample_rate, session.Process(mel.values)};
  if (counters != nullptr) *counters += session.counters();
  return out;
}

BaselineKernel::BaselineKernel(const BaselineWeights& w,
                               const VocoderConfig& cfg)
    : w_(w),
      cfg_(cfg),
      input_(w.input, w.embedding),
      l_(cfg.gate_rows()),
      hidden_(cfg.head_hidden),
      logits_(cfg.classes) {
  cfg_.Validate();
  w_.Validate(cfg_);
}

int BaselineKernel::Sample(std::vector<float>& h, int prev_code,
                           std::span<const float> cond, NoiseBuffer& noise) {
  const std::size_t block = cfg_.hidden;
  tensor::MatVecInto(w_.recurrent, h, l_, &counters_.recurrent);
  const std::span<const float> x = input_.Row(prev_code, &counters_.input);
  GateUpdate(l_.data(), cond.data(), w_.gate_bias.data(), x.data(), h.data(),
             block, block, block);
  tensor::MatVecInto(w_.head.fc1, h, hidden_, &counters_.head);
  for (std::size_t i = 0; i < hidden_.size(); ++i) {
    hidden_[i] = Relu(hidden_[i] + w_.head.fc1_bias[i]);
  }
  tensor::MatVecInto(w_.head.fc2, hidden_, logits_, &counters_.head);
  for (std::size_t i = 0; i < logits_.size(); ++i) {
    logits_[i] += w_.head.fc2_bias[i];
  }
  ++counters_.head.head_evals;
  return GumbelMax(logits_, noise.Take(cfg_.classes));
}

signal::AudioBuffer PerSampleBaseline(const signal::MelSpectrogram& mel,
                                      const BaselineWeights& w,
                                      const VocoderConfig& cfg,
                                      const signal::SignalConfig& sig,
                                      std::uint64_t seed,
                                      VocoderCounters* counters) {
  Require(mel.n_mels == static_cast<std::size_t>(cfg.n_mels),
          "PerSampleBaseline: mel bin count mismatch");
  BaselineKernel kernel(w, cfg);
  NoiseStream noise_stream(cfg, seed, 0, AvailableWorkers() > 3);
  const auto& table = MulawTable();
  std::vector<float> h(cfg.hidden, 0.0f);
  int prev = 128;
  signal::AudioBuffer out{sig.sample_rate, {}};
  out.samples.reserve(mel.n_frames() * cfg.samples_per_frame);
  for (std::size_t f = 0; f < mel.n_frames(); ++f) {
    const std::vector<float> cond = tensor::Affine(
        w.conditioning, mel.frame(f), w.conditioning_bias,
        &kernel.counters().conditioning);
    NoiseBuffer noise = noise_stream.Next();
    for (int s = 0; s < cfg.samples_per_frame; ++s) {
      prev = kernel.Sample(h, prev, cond, noise);
      out.samples.push_back(table[prev]);
    }
  }
  signal::Deemphasizer(sig.preemphasis).Process(out.samples);
  if (counters != nullptr) *counters += kernel.counters();
  return out;
}

}  // namespace ntts::vocoder
