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
#include <cmath>
#include <map>
#include <set>

#include "ntts/audio_io.h"
#include "ntts/bench.h"
#include "ntts/streaming.h"
#include "support.h"

namespace ntts::verify {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename E, typename F>
bool Throws(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

streaming::PipelineConfig PipelineFor(const io::RunConfig& rc) {
  streaming::PipelineConfig pc;
  pc.signal = rc.signal;
  pc.frontend = rc.frontend;
  pc.vocoder = rc.vocoder;
  pc.stream = rc.stream;
  return pc;
}

// ---- streaming ----

Outcome StreamingExactness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(41);
  Tally t;
  constexpr attention::AttentionVariant kVariants[] = {
      attention::AttentionVariant::kLocationSensitive,
      attention::AttentionVariant::kMonotonic,
      attention::AttentionVariant::kStepwiseMonotonic};
  int runs = 0;
  std::size_t chunks = 0;
  for (int fixture = 0; fixture < 50; ++fixture) {
    const Fixture fx = MakeFixture(RandomSmallConfig(rng), 500 + fixture);
    const auto seq = RandomTokens(rng, fx.cfg.frontend.vocab_size, 1, 6);
    const std::uint64_t seed = rng();
    streaming::PipelineConfig pc = PipelineFor(fx.cfg);
    pc.variant = kVariants[fixture % 3];
    const streaming::Models models{&fx.frontend, &fx.vocoder};
    const auto serial = streaming::RunSerial(seq, models, pc, seed);
    const auto serial_wav = io::EncodeWav(serial.audio).bytes;
    for (int capacity : {1, 2, 4, 8}) {
      pc.stream.queue_capacity = capacity;
      const auto streamed = streaming::RunStreaming(seq, models, pc, seed);
      const std::string where = Str(" (fixture ", fixture, ", capacity ",
                                    capacity, ")");
      t.Expect(BitEqual(streamed.audio.samples, serial.audio.samples),
               "streamed audio differs" + where);
      t.Expect(io::EncodeWav(streamed.audio).bytes == serial_wav,
               "streamed WAV bytes differ" + where);
      t.Expect(BitEqual(streamed.mel.values, serial.mel.values),
               "streamed mel differs" + where);
      const auto& st = streamed.stats;
      for (std::size_t i = 0; i < st.inner_counts.size(); ++i) {
        const bool last = i + 1 == st.inner_counts.size();
        t.Expect(last ? st.inner_counts[i] <= 5 : st.inner_counts[i] == 5,
                 "outer iteration ran " + Str(st.inner_counts[i]) +
                     " inner steps" + where);
      }
      for (std::size_t i = 0; i < st.mel_chunk_frames.size(); ++i) {
        const bool last = i + 1 == st.mel_chunk_frames.size();
        t.Expect(last ? st.mel_chunk_frames[i] <= 10
                      : st.mel_chunk_frames[i] == 10,
                 "mel chunk of " + Str(st.mel_chunk_frames[i]) + " frames" +
                     where);
      }
      for (std::size_t i = 0; i < st.audio_sequence.size(); ++i) {
        t.Expect(st.audio_sequence[i] == i, "audio sequence gap" + where);
      }
      t.Expect(streamed.metrics.peak_queue_depth <=
                   static_cast<std::size_t>(capacity),
               "queue exceeded its capacity" + where);
      chunks += st.mel_chunk_frames.size();
      ++runs;
    }
  }
  const double seconds = Since(start);
  t.Expect(seconds < 300.0, Str("runtime ", seconds, " s exceeds 300 s"));
  return t.Done(Str(runs, " streamed runs byte-identical to serial, ", chunks,
                    " chunks of 5 steps / 10 frames, ", seconds, " s"));
}

Outcome StreamingErrors() {
  Tally t;
  std::mt19937_64 rng(42);
  const Fixture fx = MakeFixture(RandomSmallConfig(rng), 600);
  const streaming::PipelineConfig pc = PipelineFor(fx.cfg);
  const streaming::Models models{&fx.frontend, &fx.vocoder};
  const frontend::PhonemeSequence bad = {0, fx.cfg.frontend.vocab_size + 3};
  t.Expect(Throws<std::out_of_range>(
               [&] { streaming::RunStreaming(bad, models, pc, 1); }),
           "frontend worker error must reach the caller");
  t.Expect(Throws<std::invalid_argument>([&] {
             streaming::RunStreaming(frontend::PhonemeSequence{1},
                                     {nullptr, &fx.vocoder}, pc, 1);
           }),
           "missing frontend weights");
  signal::MelSpectrogram odd;
  odd.n_mels = 40;
  odd.values.assign(400, 0.0f);
  t.Expect(Throws<std::invalid_argument>(
               [&] { streaming::RunStreaming(odd, models, pc, 1); }),
           "mel bin mismatch");
  auto bad_stream = pc;
  bad_stream.stream.frames_per_chunk = 12;
  t.Expect(Throws<std::invalid_argument>([&] {
             streaming::RunStreaming(frontend::PhonemeSequence{1}, models,
                                     bad_stream, 1);
           }),
           "inconsistent chunk size");

  streaming::StateQueue q;
  t.Expect(Throws<std::logic_error>([&] { q.Pop(); }), "pop of empty state");
  q.Push({1, 2, 3});
  t.Expect(Throws<std::logic_error>([&] { q.Push({4}); }),
           "second live state must be rejected");
  t.Expect(q.Pop() == std::vector<std::uint8_t>{1, 2, 3} && q.size() == 0,
           "state queue pop");

  streaming::BoundedQueue<int> bq(2);
  t.Expect(bq.Push(1) && bq.Push(2) && bq.peak_depth() == 2, "bounded push");
  bq.Abort();
  t.Expect(!bq.Push(3) && !bq.Pop().has_value(), "aborted queue");

  // Lower-priority frontend still gives identical audio.
  auto prio = pc;
  prio.stream.prioritize_vocoder = true;
  const auto seq = RandomTokens(rng, fx.cfg.frontend.vocab_size, 2, 5);
  const auto a = streaming::RunStreaming(seq, models, prio, 9);
  const auto b = streaming::RunSerial(seq, models, pc, 9);
  t.Expect(BitEqual(a.audio.samples, b.audio.samples),
           "prioritized streaming changed the audio");
  return t.Done("worker errors propagate; queues enforce their contracts");
}

Outcome MetricsExamples() {
  Tally t;
  streaming::Timeline tl;
  tl.request = 0.0;
  tl.first_audio = 0.05;
  tl.finished = 2.0;
  tl.frontend_busy = 0.5;
  tl.vocoder_busy = 1.0;
  tl.audio_duration = 4.0;
  tl.peak_queue_depth = 3;
  const auto m = streaming::ComputeMetrics(tl);
  t.Expect(std::abs(m.cpl_ms - 50.0) < 1e-9, Str("cpl_ms ", m.cpl_ms));
  t.Expect(std::abs(m.rtf_e2e - 2.0) < 1e-12, Str("rtf_e2e ", m.rtf_e2e));
  t.Expect(std::abs(m.rtf_frontend - 8.0) < 1e-12, "rtf_frontend");
  t.Expect(std::abs(m.rtf_vocoder - 4.0) < 1e-12, "rtf_vocoder");
  t.Expect(m.peak_queue_depth == 3 && m.wall_time == 2.0, "depth, wall");
  tl.frontend_busy = 0.0;
  t.Expect(streaming::ComputeMetrics(tl).rtf_frontend == 0.0,
           "no frontend work gives rtf_frontend 0");
  auto bad = tl;
  bad.first_audio = 3.0;
  t.Expect(Throws<std::invalid_argument>([&] { streaming::ComputeMetrics(bad); }),
           "non-monotone timeline");
  auto zero = tl;
  zero.first_audio = zero.finished = 0.0;
  t.Expect(Throws<std::invalid_argument>([&] { streaming::ComputeMetrics(zero); }),
           "zero wall time");

  // Serial mode: first audio arrives only when everything is done.
  std::mt19937_64 rng(43);
  const Fixture fx = MakeFixture(RandomSmallConfig(rng), 601);
  signal::MelSpectrogram mel;
  mel.values.assign(30 * mel.n_mels, -2.0f);
  const auto serial =
      streaming::RunSerial(mel, {nullptr, &fx.vocoder}, PipelineFor(fx.cfg), 1);
  t.Expect(std::abs(serial.metrics.cpl_ms - 1000.0 * serial.metrics.wall_time) <
               1e-9,
           "serial CPL equals the total time");
  t.Expect(serial.metrics.rtf_frontend == 0.0, "mel input has no frontend");
  t.Expect(serial.metrics.audio_duration == 0.3, "audio duration");
  return t.Done("metric formulas and serial-mode latency hold");
}

// ---- io ----

Outcome WeightFormat() {
  Tally t;
  io::WeightContainer c;
  c.Add("a", {{2, 3}, {1, 2, 3, 4, 5, 6}});
  c.Add("b.c", {{4}, {-0.0f, 1e-30f, 3.5f, -7.0f}});
  c.Add("scalar", {{}, {42.0f}});
  const auto bytes = c.Serialize();
  t.Expect(io::WeightContainer::Deserialize(bytes) == c, "round trip");
  t.Expect(std::string(bytes.begin(), bytes.begin() + 7) == "NTTSW01" &&
               bytes[7] == 1,
           "magic and version");
  for (std::size_t n = 0; n < bytes.size(); ++n) {
    const std::span<const std::uint8_t> prefix(bytes.data(), n);
    const bool ok = Throws<io::WeightFormatError>(
        [&] { io::WeightContainer::Deserialize(prefix); });
    t.Expect(ok, Str("prefix of ", n, " bytes not rejected"));
    if (n >= 8) {
      t.Expect(Throws<io::TruncatedFileError>(
                   [&] { io::WeightContainer::Deserialize(prefix); }),
               Str("prefix of ", n, " bytes: not a truncation error"));
    }
  }
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  t.Expect(Throws<io::BadMagicError>(
               [&] { io::WeightContainer::Deserialize(bad_magic); }),
           "bad magic");
  auto bad_version = bytes;
  bad_version[7] = 2;
  t.Expect(Throws<io::BadVersionError>(
               [&] { io::WeightContainer::Deserialize(bad_version); }),
           "bad version");
  io::WeightContainer dup_a;
  dup_a.Add("x", {{1}, {1.0f}});
  auto dup = dup_a.Serialize();
  // Rewrite the count to 2 and append the same record.
  const std::vector<std::uint8_t> record(dup.begin() + 12, dup.end());
  dup[8] = 2;
  dup.insert(dup.end(), record.begin(), record.end());
  t.Expect(Throws<io::DuplicateTensorError>(
               [&] { io::WeightContainer::Deserialize(dup); }),
           "duplicate name on load");
  t.Expect(Throws<io::DuplicateTensorError>([&] { dup_a.Add("x", {{1}, {2.0f}}); }),
           "duplicate name on add");
  t.Expect(Throws<io::MissingTensorError>([&] { c.Get("nope"); }), "missing");

  io::WeightContainer big;
  big.Add("m", {{1536, 512}, std::vector<float>(1536 * 512, 0.25f)});
  const auto big_bytes = big.Serialize();
  const std::size_t header = 7 + 1 + 4 + 4 + 1 + 1 + 4 + 8;
  t.Expect(big_bytes.size() - header == 3145728,
           Str("payload ", big_bytes.size() - header, " bytes"));

  const io::RunConfig rc;
  const auto g1 = io::GenerateWeights(17, rc);
  const auto g2 = io::GenerateWeights(17, rc);
  t.Expect(g1 == g2, "generation not deterministic");
  t.Expect(!(g1 == io::GenerateWeights(18, rc)), "seed has no effect");
  const std::uint32_t r_dims[] = {1536, 512};
  t.Expect(g1.Contains("vocoder.R") && g1.Get("vocoder.R").dims ==
                                           std::vector<std::uint32_t>(
                                               std::begin(r_dims),
                                               std::end(r_dims)),
           "vocoder.R must be 1536 x 512");
  for (const auto& [name, tensor] : g1.tensors()) {
    for (float v : tensor.values) {
      if (!std::isfinite(v) || std::abs(v) > 1.0f) {
        t.Expect(false, "out of range value in " + name);
        break;
      }
    }
  }
  // Loading from the serialized form gives the same models.
  const auto reloaded = io::WeightContainer::Deserialize(g1.Serialize());
  t.Expect(reloaded == g1, "default container round trip");
  return t.Done(Str(g1.size(), " generated tensors; every prefix rejected; "
                               "3145728-byte payload for 1536x512"));
}

Outcome WavFormat() {
  Tally t;
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<float> d(-1.0f, 1.0f);
  signal::AudioBuffer a;
  a.samples.resize(5000);
  for (float& v : a.samples) v = d(rng);
  const auto enc = io::EncodeWav(a);
  t.Expect(enc.clamped == 0 && enc.bytes.size() == 44 + 2 * 5000, "WAV size");
  const auto dec = io::DecodeWav(enc.bytes);
  t.Expect(dec.sample_rate == 24000 && dec.samples.size() == 5000, "shape");
  float worst = 0.0f;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    worst = std::max(worst, std::abs(dec.samples[i] - a.samples[i]));
  }
  t.Expect(worst <= 0.5f / 32767.0f + 1e-7f, Str("quantization error ", worst));
  t.Expect(io::EncodeWav(dec).bytes == enc.bytes, "write-read-write unstable");

  signal::AudioBuffer loud;
  loud.samples = {1.5f, -2.0f, 0.5f, std::nanf("")};
  const auto le = io::EncodeWav(loud);
  const auto ld = io::DecodeWav(le.bytes);
  // NaN is written as 0 and counted with the out-of-range samples.
  t.Expect(le.clamped == 3, Str("clamped ", le.clamped));
  t.Expect(ld.samples[0] == 1.0f && ld.samples[1] == -1.0f &&
               ld.samples[3] == 0.0f,
           "clamping");
  for (std::size_t n : {0ul, 10ul, 43ul, enc.bytes.size() - 1}) {
    t.Expect(Throws<io::WavError>([&] {
               io::DecodeWav(std::span<const std::uint8_t>(enc.bytes.data(), n));
             }),
             Str("truncated WAV of ", n, " bytes"));
  }
  auto stereo = enc.bytes;
  stereo[22] = 2;
  t.Expect(Throws<io::WavError>([&] { io::DecodeWav(stereo); }), "stereo");
  return t.Done(Str("PCM16 round trip within ", worst, "; byte-stable"));
}

Outcome MelFormat() {
  Tally t;
  signal::MelSpectrogram mel;
  std::mt19937_64 rng(45);
  std::normal_distribution<float> d(0.0f, 3.0f);
  mel.values.resize(17 * 80);
  for (float& v : mel.values) v = d(rng);
  const auto bytes = io::EncodeMel(mel);
  const auto back = io::DecodeMel(bytes);
  t.Expect(back.n_mels == 80 && BitEqual(back.values, mel.values), "round trip");
  for (std::size_t n = 0; n < bytes.size(); n += 97) {
    t.Expect(Throws<io::MelFormatError>([&] {
               io::DecodeMel(std::span<const std::uint8_t>(bytes.data(), n));
             }),
             Str("truncated mel of ", n, " bytes"));
  }
  const auto tokens = io::ParseTokens("3 1 4\n1 5");
  t.Expect(tokens == frontend::PhonemeSequence{3, 1, 4, 1, 5}, "token ids");
  nlohmann::json symbols = {{"AA", 2}, {"B", 7}};
  t.Expect(io::ParseTokens("B AA B", &symbols) ==
               frontend::PhonemeSequence{7, 2, 7},
           "symbol table");
  t.Expect(Throws<std::invalid_argument>([&] { io::ParseTokens("1 x"); }),
           "bad token");
  t.Expect(Throws<std::invalid_argument>([&] { io::ParseTokens("  "); }),
           "empty tokens");
  return t.Done("mel container and token parsing round trip");
}

Outcome ConfigFormat() {
  Tally t;
  io::RunConfig cfg;
  cfg.seed = 99;
  cfg.vocoder.hidden = 64;
  cfg.stream.queue_capacity = 7;
  const auto j = io::ConfigToJson(cfg);
  const auto back = io::ConfigFromJson(j);
  t.Expect(io::ConfigToJson(back) == j, "config round trip");
  t.Expect(io::ConfigHash(back) == io::ConfigHash(cfg), "hash stable");
  t.Expect(io::ConfigHash(io::RunConfig{}) != io::ConfigHash(cfg),
           "hash ignores a change");
  t.Expect(Throws<io::ConfigError>([&] {
             io::ConfigFromJson({{"vocoder", {{"hiden", 64}}}});
           }),
           "unknown key");
  t.Expect(Throws<io::ConfigError>([&] { io::ConfigFromJson({{"extra", {}}}); }),
           "unknown section");
  t.Expect(Throws<io::ConfigError>([&] {
             io::ConfigFromJson({{"vocoder", {{"hidden", "512"}}}});
           }),
           "wrong type");
  t.Expect(Throws<io::ConfigError>([&] {
             io::ConfigFromJson({{"features", {{"hop", 256}}}});
           }),
           "hop must match the vocoder frame");
  t.Expect(Throws<io::ConfigError>([&] {
             io::ConfigFromJson({{"vocoder", {{"hidden", 63}}}});
           }),
           "odd hidden size");
  return t.Done("config round trip, hash and strict validation");
}

// ---- timing ----

// Vocoder input for the throughput checks: features of a speech-like signal.
signal::MelSpectrogram TimingMel(double seconds) {
  const auto audio = SyntheticSpeech(seconds, 7);
  auto mel = signal::ExtractMel(audio, signal::FeatureConfig{},
                                signal::SignalConfig{});
  return bench::TileMel(mel, static_cast<std::size_t>(seconds * 100.0));
}

Outcome SplitStateSpeedup() {
  const auto start = Clock::now();
  Tally t;
  const auto& fx = DefaultFixture();
  const auto mel = TimingMel(5.0);
  bench::CompareOptions opts;
  opts.runs = 5;
  opts.nocache = false;
  const auto timing = bench::CompareVocoders(mel, fx.vocoder, &fx.baseline,
                                             fx.cfg.vocoder, fx.cfg.signal, 3,
                                             opts);
  const double speedup = timing.splitstate_speedup();
  const double seconds = Since(start);
  t.Expect(timing.audio_seconds >= 5.0, "less than 5 s of audio per run");
  t.Expect(speedup >= 1.5, Str("speedup ", speedup, " below 1.5"));
  t.Expect(seconds < 120.0, Str("speedup ", speedup, " but runtime ", seconds,
                                " s exceeds 120 s"));
  return t.Done(Str("speedup ", speedup, " (split ",
                    bench::Median(timing.split_seconds), " s, baseline ",
                    bench::Median(timing.baseline_seconds), " s per ",
                    timing.audio_seconds, " s of audio), ", seconds, " s"));
}

Outcome CacheSpeedup() {
  const auto start = Clock::now();
  Tally t;
  const auto& fx = DefaultFixture();
  const auto mel = TimingMel(2.0);
  bench::CompareOptions opts;
  opts.runs = 7;
  opts.baseline = false;
  const auto timing = bench::CompareVocoders(
      mel, fx.vocoder, nullptr, fx.cfg.vocoder, fx.cfg.signal, 4, opts);
  const double speedup = timing.cond_cache_speedup();
  // Exactness on the same input.
  vocoder::SynthOptions off;
  off.cache_conditioning = false;
  const auto a = vocoder::Synth(bench::TileMel(mel, 30), fx.vocoder,
                                fx.cfg.vocoder, fx.cfg.signal, 4);
  const auto b = vocoder::Synth(bench::TileMel(mel, 30), fx.vocoder,
                                fx.cfg.vocoder, fx.cfg.signal, 4, off);
  t.Expect(BitEqual(a.samples, b.samples), "cache changed the output");
  const double seconds = Since(start);
  t.Expect(speedup >= 1.10, Str("cache speedup ", speedup, " below 1.10"));
  t.Expect(seconds < 120.0, Str("runtime ", seconds, " s exceeds 120 s"));
  return t.Done(Str("cache speedup ", speedup, " (cached ",
                    bench::Median(timing.split_seconds), " s, uncached ",
                    bench::Median(timing.split_nocache_seconds), " s), ",
                    seconds, " s"));
}

Outcome StreamingLatency() {
  Tally t;
  const auto& fx = DefaultFixture();
  streaming::PipelineConfig pc = PipelineFor(fx.cfg);
  // An utterance of at least 3 s: 150 decoder steps of two 10 ms frames.
  pc.frontend.max_steps = 160;
  std::mt19937_64 rng(46);
  frontend::PhonemeSequence seq;
  signal::MelSpectrogram mel;
  for (int len = 16; len <= 256 && mel.n_frames() < 300; len *= 2) {
    seq = RandomTokens(rng, pc.frontend.vocab_size, len, len);
    mel = frontend::RunFrontend(seq, fx.frontend, pc.frontend, pc.variant);
  }
  const double duration = mel.n_frames() / 100.0;
  t.Expect(duration >= 3.0, Str("utterance only ", duration, " s"));
  const streaming::Models models{&fx.frontend, &fx.vocoder};
  std::vector<double> serial_cpl, stream_cpl;
  for (int run = 0; run < 5; ++run) {
    const auto s = streaming::RunSerial(seq, models, pc, 5);
    const auto r = streaming::RunStreaming(seq, models, pc, 5);
    t.Expect(BitEqual(s.audio.samples, r.audio.samples), "audio differs");
    serial_cpl.push_back(s.metrics.cpl_ms);
    stream_cpl.push_back(r.metrics.cpl_ms);
  }
  const double serial = bench::Median(serial_cpl);
  const double stream = bench::Median(stream_cpl);
  t.Expect(stream < 0.5 * serial,
           Str("streaming CPL ", stream, " ms vs serial ", serial, " ms"));
  return t.Done(Str(duration, " s utterance: streaming CPL ", stream,
                    " ms, serial ", serial, " ms (ratio ", stream / serial,
                    ")"));
}

// ---- registry ----

Outcome RegistryCoverage() {
  Tally t;
  std::map<std::string, int> per_criterion;
  std::set<std::string> names;
  for (const Check& c : Registry()) {
    t.Expect(names.insert(c.name).second, "duplicate check " + c.name);
    t.Expect(c.name.find('.') != std::string::npos, "unqualified " + c.name);
    t.Expect(static_cast<bool>(c.run), "check without body: " + c.name);
    if (!c.criterion.empty()) ++per_criterion[c.criterion];
  }
  for (const std::string& ac : Criteria()) {
    t.Expect(per_criterion[ac] > 0, ac + " has no registered check");
  }
  t.Expect(per_criterion.size() == Criteria().size(), "unknown criterion tag");
  return t.Done(Str(Registry().size(), " checks cover all ", Criteria().size(),
                    " criteria"));
}

}  // namespace

std::vector<Check> PipelineChecks() {
  return {
      {"streaming.exactness", "AC5", "streamed audio is byte-identical to serial over 50 fixtures x 4 capacities", false, StreamingExactness},
      {"streaming.errors", "", "worker failures propagate; queue contracts", false, StreamingErrors},
      {"streaming.metrics", "", "CPL and RTF formulas", false, MetricsExamples},
      {"io.weights", "", "weight container format", false, WeightFormat},
      {"io.wav", "", "PCM16 WAV round trip", false, WavFormat},
      {"io.mel_tokens", "", "mel container and token files", false, MelFormat},
      {"io.config", "", "config parsing and validation", false, ConfigFormat},
      {"vocoder.splitstate_speedup", "AC3", "split-state throughput >= 1.5x the per-sample baseline", true, SplitStateSpeedup},
      {"vocoder.cache_speedup", "AC4", "conditioning cache throughput >= 1.10x", true, CacheSpeedup},
      {"streaming.latency", "AC6", "streaming CPL < 0.5x serial CPL", true, StreamingLatency},
      {"verify.registry", "AC13", "every criterion has a registered check", false, RegistryCoverage},
  };
}

}  // namespace ntts::verify
