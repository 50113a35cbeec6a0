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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "ntts/frontend.h"
#include "ntts/rng.h"
#include "ntts/streaming.h"
#include "ntts/vocoder.h"
#include "support.h"

namespace ntts::verify {
namespace {

using attention::AttentionVariant;

constexpr AttentionVariant kVariants[] = {AttentionVariant::kLocationSensitive,
                                          AttentionVariant::kMonotonic,
                                          AttentionVariant::kStepwiseMonotonic};

// ---- frontend ----

Outcome TwoFramesPerStep() {
  std::mt19937_64 rng(21);
  Tally t;
  std::size_t steps_total = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const Fixture fx = MakeFixture(RandomSmallConfig(rng), 100 + trial);
    const auto& cfg = fx.cfg.frontend;
    const auto seq = RandomTokens(rng, cfg.vocab_size, 1, 8);
    const AttentionVariant variant = kVariants[trial % 3];
    frontend::FrontendTrace trace;
    const auto mel = frontend::RunFrontend(seq, fx.frontend, cfg, variant, &trace);
    t.Expect(mel.n_frames() == 2 * trace.steps,
             Str("frames ", mel.n_frames(), " for ", trace.steps, " steps"));
    t.Expect(trace.steps <= static_cast<std::size_t>(cfg.MaxSteps(seq.size())),
             "step cap exceeded");
    steps_total += trace.steps;

    const auto ctx = frontend::DecodeContext::Build(
        frontend::Encode(seq, fx.frontend, cfg), fx.frontend);
    auto state = frontend::DecoderState::Initial(cfg, seq.size());
    for (int s = 0; s < 6; ++s) {
      auto out = frontend::DecoderStep(state, ctx, fx.frontend, cfg, variant);
      t.Expect(out.frames.size() == 2 * static_cast<std::size_t>(cfg.n_mels),
               "decoder step did not emit two frames");
      t.Expect(out.state.step_index == state.step_index + 1, "step index");
      if (variant == AttentionVariant::kStepwiseMonotonic) {
        const auto& a = out.state.alignment.alignment;
        const double sum = std::accumulate(a.begin(), a.end(), 0.0);
        t.Expect(std::abs(sum - 1.0) <= 1e-5, Str("alignment sums to ", sum));
      }
      state = std::move(out.state);
    }
  }
  return t.Done(Str("24 utterances, ", steps_total,
                    " steps, two frames each"));
}

Outcome StateResume() {
  std::mt19937_64 rng(22);
  Tally t;
  int resumes = 0;
  for (int trial = 0; trial < 20; ++trial) {
    io::RunConfig rc = RandomSmallConfig(rng);
    const Fixture fx = MakeFixture(rc, 200 + trial);
    const auto& cfg = fx.cfg.frontend;
    const auto seq = RandomTokens(rng, cfg.vocab_size, 2, 8);
    const AttentionVariant variant = kVariants[trial % 3];

    streaming::StreamingDecoder full(seq, fx.frontend, cfg, variant,
                                     fx.cfg.stream);
    std::vector<std::vector<float>> chunks;
    while (!full.done()) chunks.push_back(full.NextChunk());

    for (std::size_t k = 1; k < chunks.size(); ++k) {
      std::vector<std::uint8_t> saved;
      {
        streaming::StreamingDecoder first(seq, fx.frontend, cfg, variant,
                                          fx.cfg.stream);
        for (std::size_t i = 0; i < k; ++i) first.NextChunk();
        saved = first.state_queue().Peek();
      }
      auto resumed = streaming::StreamingDecoder::Resume(
          seq, fx.frontend, cfg, variant, fx.cfg.stream, saved);
      std::size_t i = k;
      while (!resumed.done()) {
        const auto c = resumed.NextChunk();
        t.Expect(i < chunks.size() && BitEqual(c, chunks[i]),
                 Str("resumed chunk ", i, " differs (trial ", trial, ")"));
        ++i;
      }
      t.Expect(i == chunks.size(), "resumed run has a different length");
      ++resumes;
    }

    // Step-level round trip through the serialized state.
    const auto ctx = frontend::DecodeContext::Build(
        frontend::Encode(seq, fx.frontend, cfg), fx.frontend);
    auto a = frontend::DecoderState::Initial(cfg, seq.size());
    auto b = a;
    for (int s = 0; s < 8; ++s) {
      auto oa = frontend::DecoderStep(a, ctx, fx.frontend, cfg, variant);
      const auto restored = frontend::DecoderState::Deserialize(b.Serialize());
      t.Expect(restored == b, "state changed by a serialization round trip");
      auto ob = frontend::DecoderStep(restored, ctx, fx.frontend, cfg, variant);
      t.Expect(BitEqual(oa.frames, ob.frames), "frames differ after restore");
      a = std::move(oa.state);
      b = std::move(ob.state);
    }
  }
  return t.Done(Str(resumes, " interrupted runs matched the uninterrupted "
                             "output bitwise"));
}

Outcome FrontendDeterminism() {
  std::mt19937_64 rng(23);
  Tally t;
  for (int trial = 0; trial < 12; ++trial) {
    const Fixture fx = MakeFixture(RandomSmallConfig(rng), 300 + trial);
    const auto& cfg = fx.cfg.frontend;
    const auto seq = RandomTokens(rng, cfg.vocab_size, 1, 10);
    for (AttentionVariant v : kVariants) {
      frontend::FrontendTrace trace;
      const auto a = frontend::RunFrontend(seq, fx.frontend, cfg, v, &trace);
      const auto b = frontend::RunFrontend(seq, fx.frontend, cfg, v);
      t.Expect(BitEqual(a.values, b.values), "frontend not deterministic");
      if (v != AttentionVariant::kStepwiseMonotonic) continue;
      long left = 0;
      for (const auto& al : trace.alignments) {
        long lo = 0;
        while (lo < static_cast<long>(al.size()) && al[lo] <= 0.0f) ++lo;
        t.Expect(lo >= left, "leftmost attended token moved backwards");
        left = lo;
      }
    }
  }
  return t.Done("bitwise-identical reruns; stepwise leftmost token never "
                "moves back");
}

Outcome FrontendContracts() {
  Tally t;
  std::mt19937_64 rng(24);
  const io::RunConfig rc = RandomSmallConfig(rng);
  io::WeightContainer generated;
  io::AddFrontendWeights(1, rc.frontend, generated);
  io::WeightContainer zeros;
  for (const auto& [name, tensor] : generated.tensors()) {
    zeros.Add(name, {tensor.dims, std::vector<float>(tensor.values.size())});
  }
  const auto zero_w = io::LoadFrontendWeights(zeros, rc.frontend);
  const auto seq = RandomTokens(rng, rc.frontend.vocab_size, 3, 9);
  const auto mem = frontend::Encode(seq, zero_w, rc.frontend);
  t.Expect(mem.n_tokens == seq.size() &&
               mem.dim == rc.frontend.memory_dim(),
           "memory shape");
  t.Expect(std::all_of(mem.values.begin(), mem.values.end(),
                       [](float v) { return v == 0.0f; }),
           "zero weights must give zero memory");

  const auto w = io::LoadFrontendWeights(generated, rc.frontend);
  bool threw = false;
  try {
    frontend::Encode({0, rc.frontend.vocab_size}, w, rc.frontend);
  } catch (const std::out_of_range&) {
    threw = true;
  }
  t.Expect(threw, "out-of-vocabulary token must throw");

  frontend::FrontendConfig cfg = rc.frontend;
  auto fresh = frontend::DecoderState::Initial(cfg, 4);
  t.Expect(!frontend::ShouldStop(fresh, cfg), "fresh state must not stop");
  auto capped = fresh;
  capped.step_index = cfg.MaxSteps(4);
  t.Expect(frontend::ShouldStop(capped, cfg), "max_steps must stop");
  auto done = fresh;
  done.final_mass = {1.0f, 1.0f, 1.0f};
  done.step_index = 3;
  t.Expect(frontend::ShouldStop(done, cfg), "final-token mass rule");
  done.final_mass = {1.0f, 0.5f, 1.0f};
  t.Expect(!frontend::ShouldStop(done, cfg), "patience must be consecutive");
  return t.Done("encode shape, zero weights, OOV error and stop rule hold");
}

// ---- vocoder ----

vocoder::VocoderWeights SmallVocoder(const vocoder::VocoderConfig& cfg,
                                     std::uint64_t seed) {
  io::WeightContainer c;
  io::AddVocoderWeights(seed, cfg, c);
  return io::LoadVocoderWeights(c, cfg);
}

vocoder::VocoderState RandomState(std::mt19937_64& rng,
                                  const vocoder::VocoderConfig& cfg) {
  std::uniform_real_distribution<float> d(-1.0f, 1.0f);
  auto s = vocoder::VocoderState::Initial(cfg);
  for (float& v : s.h) v = d(rng);
  s.prev_code = std::uniform_int_distribution<int>(0, cfg.classes - 1)(rng);
  return s;
}

std::vector<float> RandomCond(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<float> d(-1.0f, 1.0f);
  std::vector<float> v(n);
  for (float& x : v) x = d(rng);
  return v;
}

vocoder::NoiseBuffer RandomNoise(std::mt19937_64& rng, std::size_t n) {
  std::vector<float> g(n);
  vocoder::FillGumbel(g, rng(), rng());
  return vocoder::NoiseBuffer(std::move(g));
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Outcome SplitStateExactness() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(31);
  Tally t;
  int trials = 0;
  auto compare = [&](const vocoder::VocoderWeights& w,
                     const vocoder::VocoderConfig& cfg, int per_set) {
    for (int i = 0; i < per_set; ++i, ++trials) {
      const auto state = RandomState(rng, cfg);
      const auto cond = RandomCond(rng, cfg.gate_rows());
      auto noise = RandomNoise(rng, 2 * cfg.classes + 7);
      auto noise_ref = noise;
      auto a = state, b = state;
      vocoder::VocoderCounters ca, cb;
      const auto pa = vocoder::SplitStatePair(a, cond, w, cfg, noise, &ca);
      const auto pb = vocoder::ReferencePair(b, cond, w, cfg, noise_ref, &cb);
      t.Expect(pa.first == pb.first && pa.second == pb.second,
               Str("codes differ at trial ", trials));
      t.Expect(BitEqual(a.h, b.h), Str("hidden state differs at trial ", trials));
      t.Expect(BitEqual(a.cached_l, b.cached_l), "cached L differs");
      t.Expect(a.prev_code == b.prev_code && a.prev_code == pa.second,
               "prev_code");
      t.Expect(noise.cursor() == noise_ref.cursor() &&
                   noise.cursor() == 2 * static_cast<std::size_t>(cfg.classes),
               "noise cursor");
      t.Expect(ca.recurrent.matvec_count == 1 && cb.recurrent.matvec_count == 2,
               "recurrent matvec counts");
      t.Expect(ca.head.head_evals == 2, "head evaluations");
    }
  };
  for (int set = 0; set < 995; ++set) {
    vocoder::VocoderConfig cfg = RandomSmallConfig(rng).vocoder;
    compare(SmallVocoder(cfg, rng()), cfg, 10);
  }
  const auto& fx = DefaultFixture();
  compare(fx.vocoder, fx.cfg.vocoder, 50);
  const double seconds = SecondsSince(start);
  t.Expect(seconds < 30.0, Str("runtime ", seconds, " s exceeds 30 s"));
  return t.Done(Str(trials, " trials bitwise identical (", 50,
                    " at hidden ", fx.cfg.vocoder.hidden, "), ", seconds,
                    " s"));
}

Outcome ZeroWeightCell() {
  Tally t;
  vocoder::VocoderConfig cfg;
  cfg.hidden = 16;
  cfg.head_hidden = 8;
  io::WeightContainer generated;
  io::AddVocoderWeights(1, cfg, generated);
  io::WeightContainer zeros;
  for (const auto& [name, tensor] : generated.tensors()) {
    zeros.Add(name, {tensor.dims, std::vector<float>(tensor.values.size())});
  }
  const auto w = io::LoadVocoderWeights(zeros, cfg);
  std::mt19937_64 rng(32);
  const auto state = RandomState(rng, cfg);
  auto s = state;
  auto noise = RandomNoise(rng, 2 * cfg.classes);
  vocoder::SplitStatePair(s, std::vector<float>(cfg.gate_rows()), w, cfg, noise);
  for (std::size_t i = 0; i < s.h.size(); ++i) {
    t.Expect(s.h[i] == 0.5f * state.h[i], "h' must be 0.5 * h");
  }
  auto short_noise = RandomNoise(rng, 2 * cfg.classes - 1);
  bool threw = false;
  try {
    auto s2 = state;
    vocoder::SplitStatePair(s2, std::vector<float>(cfg.gate_rows()), w, cfg,
                            short_noise);
  } catch (const vocoder::NoiseExhaustedError&) {
    threw = true;
  }
  t.Expect(threw, "exhausted noise must throw");
  return t.Done("zeroed cell halves h; short noise is rejected");
}

Outcome CostHalving() {
  Tally t;
  const auto& fx = DefaultFixture();
  const auto& cfg = fx.cfg.vocoder;
  std::vector<float> frame(cfg.n_mels, -2.0f);
  vocoder::NoiseBuffer noise = vocoder::FrameNoise(cfg, 1, 0);
  vocoder::VocoderCounters split;
  auto state = vocoder::VocoderState::Initial(cfg);
  const auto codes = vocoder::SynthFrame(state, frame, 0, fx.vocoder, cfg,
                                         noise, true, &split);
  t.Expect(codes.size() == 240, "240 codes per frame");

  vocoder::VocoderCounters base;
  signal::MelSpectrogram mel;
  mel.values = frame;
  vocoder::PerSampleBaseline(mel, fx.baseline, cfg, fx.cfg.signal, 1, &base);

  const std::uint64_t r = 3ull * cfg.hidden * cfg.hidden;
  t.Expect(r == 1536ull * 512, "R is 1536x512");
  t.Expect(split.recurrent.matvec_count == 120 &&
               split.recurrent.matvec_macs == 120 * r,
           Str("split-state recurrent: ", split.recurrent.matvec_count,
               " matvecs"));
  t.Expect(base.recurrent.matvec_count == 240 &&
               base.recurrent.matvec_macs == 240 * r,
           Str("baseline recurrent: ", base.recurrent.matvec_count, " matvecs"));
  t.Expect(2 * split.recurrent.matvec_macs == base.recurrent.matvec_macs,
           "recurrent MACs not exactly halved");
  t.Expect(split.conditioning.matvec_count == 1, "one conditioning matvec");
  t.Expect(split.head.head_evals == 240, "240 head evaluations");
  return t.Done(Str("per frame: split ", split.recurrent.matvec_macs,
                    " recurrent MACs, baseline ", base.recurrent.matvec_macs));
}

Outcome CacheExactness() {
  Tally t;
  std::mt19937_64 rng(33);
  auto run = [&](const vocoder::VocoderWeights& w,
                 const vocoder::VocoderConfig& cfg, int frames) {
    std::normal_distribution<float> d(-4.0f, 2.0f);
    std::vector<float> mel(frames * cfg.n_mels);
    for (float& v : mel) v = d(rng);
    const std::uint64_t seed = rng();
    std::vector<std::uint8_t> codes[2];
    vocoder::VocoderCounters counters[2];
    for (int mode = 0; mode < 2; ++mode) {
      auto state = vocoder::VocoderState::Initial(cfg);
      for (int f = 0; f < frames; ++f) {
        auto noise = vocoder::FrameNoise(cfg, seed, f);
        const auto c = vocoder::SynthFrame(
            state, std::span<const float>(mel).subspan(f * cfg.n_mels, cfg.n_mels),
            f, w, cfg, noise, mode == 0, &counters[mode]);
        codes[mode].insert(codes[mode].end(), c.begin(), c.end());
      }
    }
    t.Expect(codes[0] == codes[1], "conditioning cache changed the codes");
    t.Expect(counters[0].conditioning.matvec_count ==
                 static_cast<std::uint64_t>(frames),
             "cached: one conditioning matvec per frame");
    t.Expect(counters[1].conditioning.matvec_count ==
                 static_cast<std::uint64_t>(frames) * cfg.pairs_per_frame,
             "uncached: one conditioning matvec per pair");
  };
  for (int i = 0; i < 20; ++i) {
    vocoder::VocoderConfig cfg = RandomSmallConfig(rng).vocoder;
    run(SmallVocoder(cfg, rng()), cfg, 6);
  }
  run(DefaultFixture().vocoder, DefaultFixture().cfg.vocoder, 2);
  return t.Done("identical codes with and without the cache; 1 vs 120 "
                "conditioning matvecs per frame");
}

double ChiSquarePValue(double statistic, double dof) {
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

Outcome SamplerFidelity() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  constexpr int kClasses = 8;
  constexpr int kDraws = 100000;
  std::vector<float> logits(kClasses);
  for (int i = 0; i < kClasses; ++i) logits[i] = 0.5f * i;
  const auto probs = tensor::Softmax(logits);

  std::vector<float> noise(static_cast<std::size_t>(kClasses) * kDraws);
  vocoder::FillGumbel(noise, 7, 0);
  std::vector<double> gumbel(kClasses, 0.0), cdf(kClasses, 0.0);
  for (int d = 0; d < kDraws; ++d) {
    const std::span<const float> g(noise.data() + d * kClasses, kClasses);
    gumbel[vocoder::GumbelMax(logits, g)] += 1.0;
  }
  rng::SplitMix64 u(rng::Derive(7, 1, 0));
  for (int d = 0; d < kDraws; ++d) cdf[vocoder::CdfSample(probs, u.UniformDouble())] += 1.0;

  double gof = 0.0, two = 0.0;
  for (int i = 0; i < kClasses; ++i) {
    const double expected = kDraws * double(probs[i]);
    gof += (gumbel[i] - expected) * (gumbel[i] - expected) / expected;
    two += (gumbel[i] - cdf[i]) * (gumbel[i] - cdf[i]) / (gumbel[i] + cdf[i]);
  }
  const double p_gof = ChiSquarePValue(gof, kClasses - 1);
  const double p_two = ChiSquarePValue(two, kClasses - 1);
  t.Expect(p_gof > 0.001, Str("Gumbel-Max vs softmax p = ", p_gof));
  t.Expect(p_two > 0.001, Str("Gumbel-Max vs CDF sampler p = ", p_two));

  std::vector<float> degenerate(kClasses, -1e9f);
  degenerate[5] = 0.0f;
  bool always = true;
  for (int d = 0; d < 1000; ++d) {
    const std::span<const float> g(noise.data() + d * kClasses, kClasses);
    always = always && vocoder::GumbelMax(degenerate, g) == 5;
    std::vector<float> shifted = logits;
    for (float& v : shifted) v += 3.0f;
    t.Expect(vocoder::GumbelMax(shifted, g) == vocoder::GumbelMax(logits, g),
             "shift changed the sampled index");
  }
  t.Expect(always, "degenerate distribution must always pick its index");
  t.Expect(vocoder::CdfSample(std::vector<float>{0, 0, 1, 0}, 0.3) == 2,
           "one-hot CDF sample");
  t.Expect(vocoder::CdfSample(std::vector<float>{0, 0.5f, 0.5f}, 0.0) == 1,
           "u = 0 picks the first index with mass");
  bool threw = false;
  try {
    vocoder::CdfSample(std::vector<float>{0.5f, 0.6f}, 0.1);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  t.Expect(threw, "invalid distribution must throw");
  const double seconds = SecondsSince(start);
  t.Expect(seconds < 30.0, Str("runtime ", seconds, " s exceeds 30 s"));
  return t.Done(Str("100000 draws: softmax p = ", p_gof, ", two-sample p = ",
                    p_two));
}

Outcome NoiseOrder() {
  Tally t;
  std::mt19937_64 rng(34);
  vocoder::VocoderConfig cfg = RandomSmallConfig(rng).vocoder;
  const auto w = SmallVocoder(cfg, 5);
  signal::MelSpectrogram mel;
  std::normal_distribution<float> d(-4.0f, 2.0f);
  mel.values.resize(9 * mel.n_mels);
  for (float& v : mel.values) v = d(rng);
  const signal::SignalConfig sig;

  vocoder::SynthOptions on_demand, prefetch;
  on_demand.prefetch_noise = false;
  prefetch.prefetch_noise = true;
  const auto a = vocoder::Synth(mel, w, cfg, sig, 77, on_demand);
  const auto b = vocoder::Synth(mel, w, cfg, sig, 77, prefetch);
  t.Expect(BitEqual(a.samples, b.samples), "prefetched noise changed output");

  // Frames generated concurrently equal frames generated in order.
  std::vector<std::future<vocoder::NoiseBuffer>> futures;
  for (int f = 0; f < 6; ++f) {
    futures.push_back(std::async(std::launch::async,
                                 [&, f] { return vocoder::FrameNoise(cfg, 77, f); }));
  }
  for (int f = 0; f < 6; ++f) {
    const auto seq = vocoder::FrameNoise(cfg, 77, f);
    const auto par = futures[f].get();
    t.Expect(std::equal(seq.values().begin(), seq.values().end(),
                        par.values().begin(), par.values().end()),
             "concurrent noise differs");
    t.Expect(seq.values().size() ==
                 2 * static_cast<std::size_t>(cfg.pairs_per_frame) * cfg.classes,
             "noise per frame");
  }
  auto state = vocoder::VocoderState::Initial(cfg);
  auto noise = vocoder::FrameNoise(cfg, 77, 0);
  const std::vector<float> cond(cfg.gate_rows(), 0.1f);
  for (int p = 0; p < cfg.pairs_per_frame; ++p) {
    vocoder::SplitStatePair(state, cond, w, cfg, noise);
    t.Expect(noise.cursor() == static_cast<std::size_t>(p + 1) * 2 * cfg.classes,
             "cursor must advance by 2 * classes per pair");
  }
  t.Expect(noise.remaining() == 0, "a frame consumes all of its noise");
  const auto again = vocoder::Synth(mel, w, cfg, sig, 77, on_demand);
  t.Expect(BitEqual(a.samples, again.samples), "same seed, different audio");
  return t.Done("prefetched, concurrent and on-demand noise give identical "
                "output");
}

Outcome FrameAccounting() {
  Tally t;
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 6; ++trial) {
    const Fixture fx = MakeFixture(RandomSmallConfig(rng), 400 + trial);
    const std::size_t frames = 1 + trial * 7;
    signal::MelSpectrogram mel;
    mel.values.assign(frames * mel.n_mels, -3.0f);
    const auto audio =
        vocoder::Synth(mel, fx.vocoder, fx.cfg.vocoder, fx.cfg.signal, trial);
    t.Expect(audio.samples.size() == 240 * frames && audio.sample_rate == 24000,
             Str(frames, " frames gave ", audio.samples.size(), " samples"));
    t.Expect(std::all_of(audio.samples.begin(), audio.samples.end(),
                         [](float v) { return std::isfinite(v); }),
             "non-finite sample");
    streaming::PipelineConfig pc;
    pc.vocoder = fx.cfg.vocoder;
    const auto streamed = streaming::RunStreaming(
        mel, {nullptr, &fx.vocoder}, pc, trial);
    t.Expect(streamed.audio.samples.size() == 240 * frames,
             "streamed sample count");
  }
  const auto& fx = DefaultFixture();
  signal::MelSpectrogram mel;
  mel.values.assign(3 * mel.n_mels, -3.0f);
  const auto audio =
      vocoder::Synth(mel, fx.vocoder, fx.cfg.vocoder, fx.cfg.signal, 1);
  t.Expect(audio.samples.size() == 720, "default model: 3 frames -> 720");
  return t.Done("N frames -> 240 N samples at 24 kHz");
}

}  // namespace

std::vector<Check> ModelChecks() {
  return {
      {"frontend.two_frames_per_step", "AC12", "every decoder step emits exactly two frames", false, TwoFramesPerStep},
      {"frontend.state_resume", "AC12", "serialize/resume after any outer iteration is bit-exact", false, StateResume},
      {"frontend.determinism", "", "frontend reruns are bitwise identical; stepwise leftmost token non-decreasing", false, FrontendDeterminism},
      {"frontend.contracts", "", "encode shape, zero weights, OOV error, stop rule", false, FrontendContracts},
      {"vocoder.split_state_exactness", "AC1", "split-state pair equals the naive reference bitwise", false, SplitStateExactness},
      {"vocoder.zero_weight_cell", "", "zeroed cell gives h' = h / 2", false, ZeroWeightCell},
      {"vocoder.cost_halving_counters", "AC2", "120 vs 240 recurrent matvecs per frame", false, CostHalving},
      {"vocoder.cache_exactness", "AC4", "the conditioning cache never changes a code", false, CacheExactness},
      {"vocoder.sampler_fidelity", "AC7", "Gumbel-Max matches softmax and the CDF sampler", false, SamplerFidelity},
      {"vocoder.noise_order", "", "noise consumption order is fixed and scheduling independent", false, NoiseOrder},
      {"vocoder.frame_accounting", "AC13", "N mel frames give 240 N samples", false, FrameAccounting},
  };
}

}  // namespace ntts::verify
