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

#include <chrono>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "ntts/streaming.h"

namespace ntts::streaming {
namespace {

using attention::AttentionVariant;
using testing::MakeTinyModels;
using testing::SameBits;

TEST_CASE("bounded queue blocks, orders and aborts") {
  BoundedQueue<int> q(2);
  CHECK(q.Push(1));
  CHECK(q.Push(2));
  std::thread producer([&] { q.Push(3); });
  std::this_thread::sleep_for(std::chrono::milliseconds(20));
  CHECK(q.peak_depth() == 2);
  CHECK(q.Pop() == 1);
  producer.join();
  CHECK(q.Pop() == 2);
  CHECK(q.Pop() == 3);
  CHECK(q.peak_depth() <= q.capacity());

  BoundedQueue<int> empty(1);
  std::thread consumer([&] { CHECK_FALSE(empty.Pop().has_value()); });
  std::this_thread::sleep_for(std::chrono::milliseconds(10));
  empty.Abort();
  consumer.join();
  CHECK_FALSE(empty.Push(4));
}

TEST_CASE("state queue holds one live entry") {
  StateQueue q;
  CHECK_THROWS_AS(q.Pop(), std::logic_error);
  q.Push({1, 2, 3});
  CHECK(q.size() == 1);
  CHECK_THROWS_AS(q.Push({4}), std::logic_error);
  CHECK(q.Peek() == std::vector<std::uint8_t>{1, 2, 3});
  CHECK(q.Pop() == std::vector<std::uint8_t>{1, 2, 3});
}

TEST_CASE("metrics definitions") {
  Timeline t;
  t.request = 0.0;
  t.first_audio = 0.15;
  t.finished = 1.0;
  t.audio_duration = 2.0;
  t.frontend_busy = 0.5;
  const auto m = ComputeMetrics(t);
  CHECK(m.rtf_e2e == doctest::Approx(2.0));
  CHECK(m.cpl_ms == doctest::Approx(150.0));
  CHECK(m.rtf_frontend == doctest::Approx(4.0));
  CHECK(m.rtf_vocoder == 0.0);
  t.finished = 0.0;
  t.first_audio = 0.0;
  CHECK_THROWS_AS(ComputeMetrics(t), std::invalid_argument);
  t.first_audio = 2.0;
  t.finished = 1.0;
  CHECK_THROWS_AS(ComputeMetrics(t), std::invalid_argument);
}

TEST_CASE("stream configuration ties chunk sizes together") {
  StreamConfig s;
  CHECK_NOTHROW(s.Validate(2, 240));
  s.frames_per_chunk = 12;
  CHECK_THROWS_AS(s.Validate(2, 240), std::invalid_argument);
  StreamConfig zero;
  zero.queue_capacity = 0;
  CHECK_THROWS(zero.Validate(2, 240));
}

TEST_CASE("streaming decoder runs five inner steps per outer iteration") {
  const auto m = MakeTinyModels(31);
  const auto& cfg = m.cfg.frontend;
  const frontend::PhonemeSequence seq{1, 5, 2, 6, 3, 7};
  StreamingDecoder dec(seq, m.frontend, cfg,
                       AttentionVariant::kStepwiseMonotonic, StreamConfig{});
  std::vector<float> all;
  while (!dec.done()) {
    const auto chunk = dec.NextChunk();
    all.insert(all.end(), chunk.begin(), chunk.end());
    if (!dec.done()) CHECK(dec.state_queue().size() == 1);
  }
  const auto& counts = dec.inner_counts();
  REQUIRE(!counts.empty());
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) CHECK(counts[i] == 5);
  CHECK(counts.back() <= 5);
  const auto serial = frontend::RunFrontend(seq, m.frontend, cfg,
                                            AttentionVariant::kStepwiseMonotonic);
  CHECK(SameBits(all, serial.values));
}

TEST_CASE("streamed audio equals serial audio") {
  const auto m = MakeTinyModels(32);
  PipelineConfig pc;
  pc.frontend = m.cfg.frontend;
  pc.vocoder = m.cfg.vocoder;
  const Models models{&m.frontend, &m.vocoder};
  const frontend::PhonemeSequence seq{0, 3, 6, 1, 4, 7, 2};
  const auto serial = RunSerial(seq, models, pc, 17);
  CHECK(serial.audio.samples.size() == 240 * serial.mel.n_frames());
  for (int capacity : {1, 2, 8}) {
    pc.stream.queue_capacity = capacity;
    const auto streamed = RunStreaming(seq, models, pc, 17);
    CHECK(SameBits(streamed.audio.samples, serial.audio.samples));
    CHECK(SameBits(streamed.mel.values, serial.mel.values));
    CHECK(streamed.metrics.peak_queue_depth <= static_cast<std::size_t>(capacity));
    const auto& seqs = streamed.stats.audio_sequence;
    for (std::size_t i = 0; i < seqs.size(); ++i) CHECK(seqs[i] == i);
    for (std::size_t i = 0; i + 1 < streamed.stats.mel_chunk_frames.size(); ++i) {
      CHECK(streamed.stats.mel_chunk_frames[i] == 10);
    }
    CHECK(streamed.metrics.cpl_ms >= 0.0);
    CHECK(streamed.metrics.audio_duration ==
          doctest::Approx(serial.audio.duration_seconds()));
  }
}

TEST_CASE("copy-synthesis input skips the frontend") {
  const auto m = MakeTinyModels(33);
  PipelineConfig pc;
  pc.frontend = m.cfg.frontend;
  pc.vocoder = m.cfg.vocoder;
  signal::MelSpectrogram mel;
  mel.values.assign(23 * 80, -3.0f);
  for (std::size_t i = 0; i < mel.values.size(); ++i) mel.values[i] += 0.01f * (i % 97);
  const Models models{nullptr, &m.vocoder};
  const auto serial = RunSerial(mel, models, pc, 5);
  const auto streamed = RunStreaming(mel, models, pc, 5);
  CHECK(serial.audio.samples.size() == 23 * 240);
  CHECK(SameBits(streamed.audio.samples, serial.audio.samples));
  CHECK(streamed.metrics.rtf_frontend == 0.0);
  const frontend::PhonemeSequence tokens{1, 2};
  CHECK_THROWS(RunStreaming(tokens, models, pc, 5));
}

}  // namespace
}  // namespace ntts::streaming
