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

#include "ntts/streaming.h"

#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#if defined(__linux__)
#include <sys/resource.h>
#include <sys/syscall.h>
#include <unistd.h>
#endif

namespace ntts::streaming {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double>(to - from).count();
}

void LowerCurrentThreadPriority() {
#if defined(__linux__)
  const auto tid = static_cast<id_t>(syscall(SYS_gettid));
  setpriority(PRIO_PROCESS, tid, 5);  // best effort
#endif
}

// First error wins; every queue is aborted so blocked workers return.
class FailureSlot {
 public:
  template <typename... Queues>
  void Fail(std::exception_ptr e, Queues&... queues) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (!error_) error_ = e;
    }
    (queues.Abort(), ...);
  }
  void Rethrow() {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

std::vector<std::vector<float>> SplitMel(const signal::MelSpectrogram& mel,
                                         std::size_t frames_per_chunk) {
  std::vector<std::vector<float>> chunks;
  const std::size_t stride = frames_per_chunk * mel.n_mels;
  for (std::size_t start = 0; start < mel.values.size(); start += stride) {
    const std::size_t end = std::min(mel.values.size(), start + stride);
    chunks.emplace_back(mel.values.begin() + start, mel.values.begin() + end);
  }
  return chunks;
}

void ValidateModels(const PipelineInput& input, const Models& models,
                    const PipelineConfig& cfg) {
  if (models.vocoder == nullptr) {
    throw std::invalid_argument("pipeline: vocoder weights required");
  }
  if (std::holds_alternative<frontend::PhonemeSequence>(input) &&
      models.frontend == nullptr) {
    throw std::invalid_argument("pipeline: frontend weights required");
  }
  if (const auto* mel = std::get_if<signal::MelSpectrogram>(&input)) {
    if (mel->n_mels != static_cast<std::size_t>(cfg.vocoder.n_mels)) {
      throw std::invalid_argument("pipeline: mel bin count mismatch");
    }
  }
  cfg.stream.Validate(cfg.frontend.frames_per_step,
                      cfg.vocoder.samples_per_frame);
}

}  // namespace

void StreamConfig::Validate(int frames_per_step, int samples_per_frame) const {
  if (inner_steps <= 0) {
    throw std::invalid_argument("stream.inner_steps must be positive");
  }
  if (frames_per_chunk != frames_per_step * inner_steps) {
    throw std::invalid_argument(
        "stream.frames_per_chunk must equal frames_per_step * inner_steps");
  }
  if (samples_per_chunk != samples_per_frame * frames_per_chunk) {
    throw std::invalid_argument(
        "stream.samples_per_chunk must equal samples_per_frame * "
        "frames_per_chunk");
  }
  if (queue_capacity < 1) {
    throw std::invalid_argument("stream.queue_capacity must be >= 1");
  }
}

void StateQueue::Push(std::vector<std::uint8_t> state) {
  if (!entries_.empty()) {
    throw std::logic_error("StateQueue: a live state is already cached");
  }
  entries_.push_back(std::move(state));
}

std::vector<std::uint8_t> StateQueue::Pop() {
  if (entries_.empty()) throw std::logic_error("StateQueue: empty");
  std::vector<std::uint8_t> s = std::move(entries_.front());
  entries_.pop_front();
  return s;
}

const std::vector<std::uint8_t>& StateQueue::Peek() const {
  if (entries_.empty()) throw std::logic_error("StateQueue: empty");
  return entries_.front();
}

StreamingDecoder::StreamingDecoder(const frontend::PhonemeSequence& seq,
                                   const frontend::FrontendWeights& w,
                                   const frontend::FrontendConfig& cfg,
                                   attention::AttentionVariant variant,
                                   const StreamConfig& stream)
    : w_(w),
      cfg_(cfg),
      variant_(variant),
      stream_(stream),
      ctx_(frontend::DecodeContext::Build(frontend::Encode(seq, w, cfg), w)) {
  if (stream_.inner_steps <= 0) {
    throw std::invalid_argument("stream.inner_steps must be positive");
  }
  states_.Push(frontend::DecoderState::Initial(cfg_, seq.size()).Serialize());
}

StreamingDecoder StreamingDecoder::Resume(
    const frontend::PhonemeSequence& seq, const frontend::FrontendWeights& w,
    const frontend::FrontendConfig& cfg, attention::AttentionVariant variant,
    const StreamConfig& stream, std::span<const std::uint8_t> state) {
  StreamingDecoder d(seq, w, cfg, variant, stream);
  const frontend::DecoderState restored =
      frontend::DecoderState::Deserialize(state);
  if (restored.alignment.alignment.size() != seq.size()) {
    throw std::invalid_argument("Resume: state does not match the sequence");
  }
  d.states_.Pop();
  d.done_ = frontend::ShouldStop(restored, cfg);
  d.states_.Push(restored.Serialize());
  return d;
}

std::vector<float> StreamingDecoder::NextChunk() {
  if (done_) return {};
  frontend::DecoderState state =
      frontend::DecoderState::Deserialize(states_.Pop());
  std::vector<float> frames;
  frames.reserve(static_cast<std::size_t>(stream_.frames_per_chunk) *
                 cfg_.n_mels);
  int inner = 0;
  while (inner < stream_.inner_steps) {
    frontend::DecoderOutput out =
        frontend::DecoderStep(state, ctx_, w_, cfg_, variant_);
    frames.insert(frames.end(), out.frames.begin(), out.frames.end());
    state = std::move(out.state);
    ++inner;
    if (frontend::ShouldStop(state, cfg_)) {
      done_ = true;
      break;
    }
  }
  states_.Push(state.Serialize());
  ++outer_;
  inner_counts_.push_back(inner);
  return frames;
}

PipelineMetrics ComputeMetrics(const Timeline& t) {
  if (!(t.request <= t.first_audio && t.first_audio <= t.finished)) {
    throw std::invalid_argument("ComputeMetrics: timestamps not monotone");
  }
  const double wall = t.finished - t.request;
  if (wall <= 0.0) throw std::invalid_argument("ComputeMetrics: zero wall time");
  PipelineMetrics m;
  m.audio_duration = t.audio_duration;
  m.wall_time = wall;
  m.cpl_ms = (t.first_audio - t.request) * 1000.0;
  m.rtf_e2e = t.audio_duration / wall;
  m.rtf_frontend =
      t.frontend_busy > 0.0 ? t.audio_duration / t.frontend_busy : 0.0;
  m.rtf_vocoder =
      t.vocoder_busy > 0.0 ? t.audio_duration / t.vocoder_busy : 0.0;
  m.peak_queue_depth = t.peak_queue_depth;
  return m;
}

PipelineResult RunStreaming(const PipelineInput& input, const Models& models,
                            const PipelineConfig& cfg, std::uint64_t seed) {
  ValidateModels(input, models, cfg);
  const auto request = Clock::now();
  const std::size_t capacity = cfg.stream.queue_capacity;
  BoundedQueue<StreamChunk> mel_queue(capacity);
  BoundedQueue<StreamChunk> audio_queue(capacity);
  FailureSlot failure;

  PipelineResult result;
  result.mel.n_mels = cfg.vocoder.n_mels;
  result.audio.sample_rate = cfg.signal.sample_rate;
  double frontend_busy = 0.0;
  double vocoder_busy = 0.0;
  Clock::time_point first_audio{};
  bool have_audio = false;

  std::thread frontend_worker([&] {
    try {
      if (cfg.stream.prioritize_vocoder) LowerCurrentThreadPriority();
      std::uint64_t seq = 0;
      if (const auto* tokens = std::get_if<frontend::PhonemeSequence>(&input)) {
        auto t0 = Clock::now();
        StreamingDecoder decoder(*tokens, *models.frontend, cfg.frontend,
                                 cfg.variant, cfg.stream);
        frontend_busy += Seconds(t0, Clock::now());
        while (!decoder.done()) {
          t0 = Clock::now();
          std::vector<float> frames = decoder.NextChunk();
          frontend_busy += Seconds(t0, Clock::now());
          if (frames.empty()) break;
          if (!mel_queue.Push({StreamChunk::Kind::kMel, seq++, std::move(frames)})) {
            return;
          }
        }
        result.stats.outer_iterations = decoder.outer_iterations();
        result.stats.inner_counts = decoder.inner_counts();
      } else {
        const auto& mel = std::get<signal::MelSpectrogram>(input);
        for (auto& chunk : SplitMel(mel, cfg.stream.frames_per_chunk)) {
          if (!mel_queue.Push({StreamChunk::Kind::kMel, seq++, std::move(chunk)})) {
            return;
          }
        }
      }
      mel_queue.Push({StreamChunk::Kind::kEnd, seq, {}});
    } catch (...) {
      failure.Fail(std::current_exception(), mel_queue, audio_queue);
    }
  });

  std::thread vocoder_worker([&] {
    try {
      vocoder::VocoderSession session(*models.vocoder, cfg.vocoder, cfg.signal,
                                      seed, cfg.synth);
      std::uint64_t seq = 0;
      while (true) {
        std::optional<StreamChunk> chunk = mel_queue.Pop();
        if (!chunk) return;
        if (chunk->kind == StreamChunk::Kind::kEnd) break;
        const auto t0 = Clock::now();
        std::vector<float> audio = session.Process(chunk->data);
        vocoder_busy += Seconds(t0, Clock::now());
        result.stats.mel_chunk_frames.push_back(chunk->data.size() /
                                                cfg.vocoder.n_mels);
        result.mel.values.insert(result.mel.values.end(), chunk->data.begin(),
                                 chunk->data.end());
        if (!audio_queue.Push({StreamChunk::Kind::kAudio, seq++, std::move(audio)})) {
          return;
        }
      }
      result.stats.counters = session.counters();
      audio_queue.Push({StreamChunk::Kind::kEnd, seq, {}});
    } catch (...) {
      failure.Fail(std::current_exception(), mel_queue, audio_queue);
    }
  });

  std::thread sink_worker([&] {
    try {
      std::uint64_t expected = 0;
      while (true) {
        std::optional<StreamChunk> chunk = audio_queue.Pop();
        if (!chunk) return;
        if (chunk->kind == StreamChunk::Kind::kEnd) break;
        if (!have_audio) {
          first_audio = Clock::now();
          have_audio = true;
        }
        if (chunk->sequence != expected) {
          throw std::logic_error("sink: audio chunk " +
                                 std::to_string(chunk->sequence) +
                                 " arrived, expected " +
                                 std::to_string(expected));
        }
        ++expected;
        result.stats.audio_sequence.push_back(chunk->sequence);
        result.audio.samples.insert(result.audio.samples.end(),
                                    chunk->data.begin(), chunk->data.end());
      }
    } catch (...) {
      failure.Fail(std::current_exception(), mel_queue, audio_queue);
    }
  });

  frontend_worker.join();
  vocoder_worker.join();
  sink_worker.join();
  failure.Rethrow();

  const auto finished = Clock::now();
  Timeline t;
  t.first_audio = have_audio ? Seconds(request, first_audio)
                             : Seconds(request, finished);
  t.finished = Seconds(request, finished);
  t.frontend_busy = frontend_busy;
  t.vocoder_busy = vocoder_busy;
  t.audio_duration = result.audio.duration_seconds();
  t.peak_queue_depth =
      std::max(mel_queue.peak_depth(), audio_queue.peak_depth());
  result.metrics = ComputeMetrics(t);
  return result;
}

PipelineResult RunSerial(const PipelineInput& input, const Models& models,
                         const PipelineConfig& cfg, std::uint64_t seed) {
  ValidateModels(input, models, cfg);
  const auto request = Clock::now();
  PipelineResult result;
  if (const auto* tokens = std::get_if<frontend::PhonemeSequence>(&input)) {
    frontend::FrontendTrace trace;
    result.mel = frontend::RunFrontend(*tokens, *models.frontend, cfg.frontend,
                                       cfg.variant, &trace);
  } else {
    result.mel = std::get<signal::MelSpectrogram>(input);
  }
  const auto frontend_done = Clock::now();
  result.audio = vocoder::Synth(result.mel, *models.vocoder, cfg.vocoder,
                                cfg.signal, seed, cfg.synth,
                                &result.stats.counters);
  const auto finished = Clock::now();

  Timeline t;
  t.finished = Seconds(request, finished);
  t.first_audio = t.finished;  // nothing is playable before the end
  t.frontend_busy = std::holds_alternative<frontend::PhonemeSequence>(input)
                        ? Seconds(request, frontend_done)
                        : 0.0;
  t.vocoder_busy = Seconds(frontend_done, finished);
  t.audio_duration = result.audio.duration_seconds();
  result.metrics = ComputeMetrics(t);
  return result;
}

}  // namespace ntts::streaming
