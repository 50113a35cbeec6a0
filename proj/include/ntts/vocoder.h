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

// Split-state WaveRNN vocoder.
//
// The GRU hidden state h = [h_A; h_B] is split in two halves. One recurrent
// product L = R * h (3 * hidden rows) is computed per pair of samples. Half A
// reads the A sublanes of every gate block (indices [0, hidden/2) within each
// block of `hidden`) and predicts sample t; half B reads the B sublanes of the
// same L and predicts sample t+1 from the code sampled for t. Both halves see
// the pre-update h, which is what makes reusing L exact.
//
// Per half, with g = ((L + cond) + gate_bias) + x:
//   z = sigmoid(g_z), r = sigmoid(g_r)
//   n = tanh(((r * L_n + cond_n) + gate_bias_n) + x_n)
//   h' = z * h + (1 - z) * n
// where x is the input projection of the previous mu-law code's embedding
// and cond is the per-frame conditioning vector C * mel + c.

#ifndef NTTS_VOCODER_H_
#define NTTS_VOCODER_H_

#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ntts/signal.h"
#include "ntts/tensor.h"

namespace ntts::vocoder {

struct VocoderConfig {
  int hidden = 512;
  int embed_dim = 32;
  int classes = 256;
  int samples_per_frame = 240;
  int pairs_per_frame = 120;
  int head_hidden = 256;
  int n_mels = 80;

  void Validate() const;
  std::size_t half() const { return hidden / 2; }
  std::size_t gate_rows() const { return 3 * static_cast<std::size_t>(hidden); }
  std::size_t noise_per_frame() const {
    return static_cast<std::size_t>(samples_per_frame) * classes;
  }
};

// Two-layer output head: relu(fc1 * h + b1) -> fc2 * . + b2 logits.
struct Head {
  tensor::Matrix fc1;
  std::vector<float> fc1_bias;
  tensor::Matrix fc2;
  std::vector<float> fc2_bias;
};

struct VocoderWeights {
  tensor::Matrix embedding;  // classes x embed_dim, row-major lookup table
  tensor::Matrix input_a;    // 3 * half x embed_dim
  tensor::Matrix input_b;    // 3 * half x embed_dim
  tensor::Matrix recurrent;  // 3 * hidden x hidden
  std::vector<float> gate_bias;
  tensor::Matrix conditioning;  // 3 * hidden x n_mels
  std::vector<float> conditioning_bias;
  Head head_a;  // half -> head_hidden -> classes
  Head head_b;

  void Validate(const VocoderConfig& cfg) const;
};

// Conventional single-sample GRU vocoder of the same width, used as the
// throughput baseline. Same cell equations over the full hidden state.
struct BaselineWeights {
  tensor::Matrix embedding;
  tensor::Matrix input;  // 3 * hidden x embed_dim
  tensor::Matrix recurrent;
  std::vector<float> gate_bias;
  tensor::Matrix conditioning;
  std::vector<float> conditioning_bias;
  Head head;  // hidden -> head_hidden -> classes

  void Validate(const VocoderConfig& cfg) const;
};

struct VocoderState {
  std::vector<float> h;
  // Recurrent pre-activation R * h of the most recent pair.
  std::vector<float> cached_l;
  bool l_valid = false;
  // Conditioning vector of frame `cond_frame`; -1 when empty.
  std::vector<float> cached_cond;
  std::int64_t cond_frame = -1;
  int prev_code = 128;

  static VocoderState Initial(const VocoderConfig& cfg);
};

struct VocoderCounters {
  tensor::OpCounters recurrent;
  tensor::OpCounters conditioning;
  tensor::OpCounters input;
  tensor::OpCounters head;

  void Reset() { *this = VocoderCounters{}; }
  VocoderCounters& operator+=(const VocoderCounters& other);
};

class NoiseExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pre-sampled Gumbel values consumed strictly in order.
class NoiseBuffer {
 public:
  NoiseBuffer() = default;
  explicit NoiseBuffer(std::vector<float> values) : values_(std::move(values)) {}

  // Next `n` values. Throws NoiseExhaustedError if fewer remain.
  std::span<const float> Take(std::size_t n);
  std::size_t cursor() const { return cursor_; }
  std::size_t remaining() const { return values_.size() - cursor_; }
  std::span<const float> values() const { return values_; }

 private:
  std::vector<float> values_;
  std::size_t cursor_ = 0;
};

// g = -ln(-ln(u)), u uniform in (0, 1), from a stream keyed by
// (seed, frame_index). Identical regardless of which thread fills it.
void FillGumbel(std::span<float> out, std::uint64_t seed,
                std::uint64_t frame_index);
NoiseBuffer FrameNoise(const VocoderConfig& cfg, std::uint64_t seed,
                       std::uint64_t frame_index);

// Hands out per-frame noise in frame order. With prefetch enabled the next
// frame is generated on a helper thread while the current one is consumed;
// the values are the same either way.
class NoiseStream {
 public:
  NoiseStream(const VocoderConfig& cfg, std::uint64_t seed,
              std::uint64_t first_frame, bool prefetch);
  ~NoiseStream();
  NoiseStream(const NoiseStream&) = delete;
  NoiseStream& operator=(const NoiseStream&) = delete;

  NoiseBuffer Next();
  std::uint64_t next_frame() const { return next_frame_; }

 private:
  VocoderConfig cfg_;
  std::uint64_t seed_;
  std::uint64_t next_frame_;
  bool prefetch_;
  std::optional<std::future<NoiseBuffer>> pending_;
};

// Worker budget from NTTS_THREADS, else the hardware concurrency.
unsigned AvailableWorkers();

// argmax(logits + g), lowest index on ties.
int GumbelMax(std::span<const float> logits, std::span<const float> g);
// argmax(softmax(logits) + g). Not a softmax sampler; kept only to compare
// against the logit form.
int GumbelMaxOnProbabilities(std::span<const float> logits,
                             std::span<const float> g);
// Smallest index whose running sum exceeds u. Throws std::invalid_argument
// unless probs is a distribution (non-negative, sums to 1 within 1e-6).
int CdfSample(std::span<const float> probs, double u);

enum class GumbelInput { kLogits, kProbabilities };

struct SynthOptions {
  bool cache_conditioning = true;
  std::optional<bool> prefetch_noise;  // unset: prefetch if workers allow
  GumbelInput gumbel_input = GumbelInput::kLogits;
};

struct SampledPair {
  int first = 0;
  int second = 0;
};

// C * frame + c.
std::vector<float> ConditionFrame(std::span<const float> frame,
                                  const VocoderWeights& w,
                                  tensor::OpCounters* counters = nullptr);

// Scratch-owning evaluator for the split-state network.
// Input projection W_x * embed(code), one row per code, computed on first use.
class InputProjection {
 public:
  InputProjection(const tensor::Matrix& input, const tensor::Matrix& embedding);

  std::span<const float> Row(int code, tensor::OpCounters* counters = nullptr);

 private:
  const tensor::Matrix& input_;
  const tensor::Matrix& embedding_;
  std::vector<float> table_;
  std::vector<bool> ready_;
};

class SplitStateKernel {
 public:
  SplitStateKernel(const VocoderWeights& w, const VocoderConfig& cfg,
                   GumbelInput gumbel_input = GumbelInput::kLogits);

  // One recurrent product, two samples. Consumes 2 * classes noise values.
  SampledPair Pair(VocoderState& state, std::span<const float> cond,
                   NoiseBuffer& noise);

  // condition_frame (unless cached for `frame_index`) then pairs_per_frame
  // pairs. Writes samples_per_frame codes.
  void SynthFrame(VocoderState& state, std::span<const float> frame,
                  std::int64_t frame_index, NoiseBuffer& noise,
                  bool cache_conditioning, std::span<std::uint8_t> codes);

  VocoderCounters& counters() { return counters_; }

 private:
  void HalfStep(VocoderState& state, std::span<const float> cond,
                std::size_t offset, InputProjection& input, int code);
  int Sample(const Head& head, std::span<const float> h, NoiseBuffer& noise);

  const VocoderWeights& w_;
  VocoderConfig cfg_;
  GumbelInput gumbel_input_;
  VocoderCounters counters_;
  InputProjection input_a_;
  InputProjection input_b_;
  std::vector<float> hidden_;
  std::vector<float> logits_;
  std::vector<float> cond_;
};

// Free-function forms of a single pair.
SampledPair SplitStatePair(VocoderState& state, std::span<const float> cond,
                           const VocoderWeights& w, const VocoderConfig& cfg,
                           NoiseBuffer& noise,
                           VocoderCounters* counters = nullptr);

// Naive recomputation: evaluates R * h separately for each half-step with
// plain loops over the logical matrix. Must agree with SplitStatePair bit
// for bit.
SampledPair ReferencePair(VocoderState& state, std::span<const float> cond,
                          const VocoderWeights& w, const VocoderConfig& cfg,
                          NoiseBuffer& noise,
                          VocoderCounters* counters = nullptr);

std::vector<std::uint8_t> SynthFrame(VocoderState& state,
                                     std::span<const float> frame,
                                     std::int64_t frame_index,
                                     const VocoderWeights& w,
                                     const VocoderConfig& cfg,
                                     NoiseBuffer& noise,
                                     bool cache_conditioning = true,
                                     VocoderCounters* counters = nullptr);

// Incremental synthesis: mel frames in, de-emphasized 24 kHz samples out.
// Feeding an utterance in any chunking yields the same samples as Synth.
class VocoderSession {
 public:
  VocoderSession(const VocoderWeights& w, const VocoderConfig& cfg,
                 const signal::SignalConfig& sig, std::uint64_t seed,
                 SynthOptions options = {});

  // `frames` is frame-major, n_mels values per frame.
  std::vector<float> Process(std::span<const float> frames);

  std::uint64_t frames_done() const { return frames_done_; }
  const VocoderCounters& counters() { return kernel_.counters(); }
  const std::vector<std::uint8_t>& last_codes() const { return codes_; }

 private:
  VocoderConfig cfg_;
  SynthOptions options_;
  SplitStateKernel kernel_;
  VocoderState state_;
  NoiseStream noise_;
  signal::Deemphasizer deemphasis_;
  std::uint64_t frames_done_ = 0;
  std::vector<std::uint8_t> codes_;
};

// Full vocoder path: frames -> codes -> mu-law decode -> de-emphasis.
signal::AudioBuffer Synth(const signal::MelSpectrogram& mel,
                          const VocoderWeights& w, const VocoderConfig& cfg,
                          const signal::SignalConfig& sig, std::uint64_t seed,
                          SynthOptions options = {},
                          VocoderCounters* counters = nullptr);

// One full recurrent product per sample.
class BaselineKernel {
 public:
  BaselineKernel(const BaselineWeights& w, const VocoderConfig& cfg);

  int Sample(std::vector<float>& h, int prev_code, std::span<const float> cond,
             NoiseBuffer& noise);

  VocoderCounters& counters() { return counters_; }

 private:
  const BaselineWeights& w_;
  VocoderConfig cfg_;
  VocoderCounters counters_;
  InputProjection input_;
  std::vector<float> l_;
  std::vector<float> hidden_;
  std::vector<float> logits_;
};

signal::AudioBuffer PerSampleBaseline(const signal::MelSpectrogram& mel,
                                      const BaselineWeights& w,
                                      const VocoderConfig& cfg,
                                      const signal::SignalConfig& sig,
                                      std::uint64_t seed,
                                      VocoderCounters* counters = nullptr);

}  // namespace ntts::vocoder

#endif  // NTTS_VOCODER_H_
