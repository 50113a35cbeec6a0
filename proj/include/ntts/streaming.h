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

// End-to-end streaming synthesis.
//
// Three workers connected by two bounded FIFO queues:
//
//   frontend --(mel chunks)--> vocoder --(audio chunks)--> sink
//
// The frontend runs an outer loop that pops the cached decoder state, runs
// `inner_steps` decoder steps (two mel frames each) and pushes the state
// back. The vocoder starts on the first chunk it receives. Output is
// independent of scheduling and matches the serial path bit for bit.

#ifndef NTTS_STREAMING_H_
#define NTTS_STREAMING_H_

#include <algorithm>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ntts/attention.h"
#include "ntts/frontend.h"
#include "ntts/signal.h"
#include "ntts/vocoder.h"

namespace ntts::streaming {

struct StreamConfig {
  int inner_steps = 5;
  int frames_per_chunk = 10;
  int samples_per_chunk = 2400;
  int queue_capacity = 4;
  // Marks the vocoder worker latency-critical; the frontend worker then runs
  // at lower scheduling priority where the platform allows it.
  bool prioritize_vocoder = false;

  void Validate(int frames_per_step, int samples_per_frame) const;
};

// Blocking FIFO with a fixed capacity. Abort() wakes every waiter; after it,
// Push returns false and Pop returns nullopt.
template <typename T>
class BoundedQueue {
 public:
  explicit BoundedQueue(std::size_t capacity) : capacity_(capacity) {}

  bool Push(T item) {
    std::unique_lock<std::mutex> lock(mu_);
    not_full_.wait(lock, [&] { return aborted_ || items_.size() < capacity_; });
    if (aborted_) return false;
    items_.push_back(std::move(item));
    peak_ = std::max(peak_, items_.size());
    not_empty_.notify_one();
    return true;
  }

  std::optional<T> Pop() {
    std::unique_lock<std::mutex> lock(mu_);
    not_empty_.wait(lock, [&] { return aborted_ || !items_.empty(); });
    if (aborted_) return std::nullopt;
    T item = std::move(items_.front());
    items_.pop_front();
    not_full_.notify_one();
    return item;
  }

  void Abort() {
    std::lock_guard<std::mutex> lock(mu_);
    aborted_ = true;
    not_full_.notify_all();
    not_empty_.notify_all();
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t peak_depth() const {
    std::lock_guard<std::mutex> lock(mu_);
    return peak_;
  }

 private:
  const std::size_t capacity_;
  mutable std::mutex mu_;
  std::condition_variable not_full_;
  std::condition_variable not_empty_;
  std::deque<T> items_;
  std::size_t peak_ = 0;
  bool aborted_ = false;
};

struct StreamChunk {
  enum class Kind { kMel, kAudio, kEnd };
  Kind kind = Kind::kEnd;
  std::uint64_t sequence = 0;
  std::vector<float> data;  // mel: frame-major frames; audio: samples
};

// Cache of serialized decoder states between outer iterations. Holds exactly
// one entry while a session is live.
class StateQueue {
 public:
  void Push(std::vector<std::uint8_t> state);
  std::vector<std::uint8_t> Pop();
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::uint8_t>& Peek() const;

 private:
  std::deque<std::vector<std::uint8_t>> entries_;
};

// The frontend's outer/inner streaming loop.
class StreamingDecoder {
 public:
  StreamingDecoder(const frontend::PhonemeSequence& seq,
                   const frontend::FrontendWeights& w,
                   const frontend::FrontendConfig& cfg,
                   attention::AttentionVariant variant,
                   const StreamConfig& stream);

  // Continues from a state serialized after some outer iteration.
  static StreamingDecoder Resume(const frontend::PhonemeSequence& seq,
                                 const frontend::FrontendWeights& w,
                                 const frontend::FrontendConfig& cfg,
                                 attention::AttentionVariant variant,
                                 const StreamConfig& stream,
                                 std::span<const std::uint8_t> state);

  // One outer iteration: pop state, run up to `inner_steps` decoder steps,
  // push state. Returns the frames produced (empty once finished).
  std::vector<float> NextChunk();
  bool done() const { return done_; }

  const StateQueue& state_queue() const { return states_; }
  std::uint64_t outer_iterations() const { return outer_; }
  // Inner steps run during each outer iteration so far.
  const std::vector<int>& inner_counts() const { return inner_counts_; }

 private:
  const frontend::FrontendWeights& w_;
  frontend::FrontendConfig cfg_;
  attention::AttentionVariant variant_;
  StreamConfig stream_;
  frontend::DecodeContext ctx_;
  StateQueue states_;
  bool done_ = false;
  std::uint64_t outer_ = 0;
  std::vector<int> inner_counts_;
};

struct PipelineMetrics {
  double cpl_ms = 0.0;
  double rtf_e2e = 0.0;
  double rtf_frontend = 0.0;  // 0 when no frontend ran (mel input)
  double rtf_vocoder = 0.0;
  double audio_duration = 0.0;  // seconds
  double wall_time = 0.0;       // seconds
  std::size_t peak_queue_depth = 0;
};

// Raw timings of one run, seconds relative to the request.
struct Timeline {
  double request = 0.0;
  double first_audio = 0.0;
  double finished = 0.0;
  double frontend_busy = 0.0;
  double vocoder_busy = 0.0;
  double audio_duration = 0.0;
  std::size_t peak_queue_depth = 0;
};

// RTF = audio duration / time; CPL = first audio - request. Throws
// std::invalid_argument for non-monotone timestamps or zero wall time.
PipelineMetrics ComputeMetrics(const Timeline& t);

struct Models {
  const frontend::FrontendWeights* frontend = nullptr;
  const vocoder::VocoderWeights* vocoder = nullptr;
};

struct PipelineConfig {
  signal::SignalConfig signal;
  frontend::FrontendConfig frontend;
  vocoder::VocoderConfig vocoder;
  StreamConfig stream;
  attention::AttentionVariant variant =
      attention::AttentionVariant::kStepwiseMonotonic;
  vocoder::SynthOptions synth;
};

// Phoneme tokens, or a mel spectrogram for copy-synthesis.
using PipelineInput =
    std::variant<frontend::PhonemeSequence, signal::MelSpectrogram>;

struct StreamStats {
  std::uint64_t outer_iterations = 0;
  std::vector<int> inner_counts;
  std::vector<std::size_t> mel_chunk_frames;
  std::vector<std::uint64_t> audio_sequence;  // as received by the sink
  vocoder::VocoderCounters counters;
};

struct PipelineResult {
  signal::AudioBuffer audio;
  signal::MelSpectrogram mel;
  PipelineMetrics metrics;
  StreamStats stats;
};

PipelineResult RunStreaming(const PipelineInput& input, const Models& models,
                            const PipelineConfig& cfg, std::uint64_t seed);

// Frontend to completion, then the vocoder over every frame.
PipelineResult RunSerial(const PipelineInput& input, const Models& models,
                         const PipelineConfig& cfg, std::uint64_t seed);

}  // namespace ntts::streaming

#endif  // NTTS_STREAMING_H_
