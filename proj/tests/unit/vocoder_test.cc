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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "ntts/vocoder.h"

namespace ntts::vocoder {
namespace {

using testing::MakeTinyModels;
using testing::SameBits;

std::vector<float> Linspace(double lo, double hi, std::size_t n) {
  std::vector<float> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<float>(lo + (hi - lo) * i / (n - 1));
  }
  return v;
}

std::vector<float> RandomMel(std::mt19937_64& rng, std::size_t frames,
                             std::size_t n_mels) {
  std::normal_distribution<float> d(-4.0f, 2.0f);
  std::vector<float> v(frames * n_mels);
  for (float& x : v) x = d(rng);
  return v;
}

TEST_CASE("split-state pair matches float64 reference values") {
  const auto m = MakeTinyModels(5);
  const auto& cfg = m.cfg.vocoder;
  auto state = VocoderState::Initial(cfg);
  state.h = {0.1f, -0.2f, 0.3f, -0.4f};
  state.prev_code = 128;
  const auto cond = Linspace(-0.3, 0.3, 12);

  NoiseBuffer zero(std::vector<float>(512, 0.0f));
  const auto first = SplitStatePair(state, cond, m.vocoder, cfg, zero);
  CHECK(first.first == 65);
  CHECK(first.second == 24);
  const double h1[] = {-0.0811904711, 0.253472365, -0.0738632563, -0.157634058};
  for (int i = 0; i < 4; ++i) CHECK(state.h[i] == doctest::Approx(h1[i]).epsilon(1e-5));
  CHECK(state.prev_code == 24);

  std::vector<float> forced(512, 0.0f);
  forced[7] = 50.0f;
  NoiseBuffer noise(forced);
  const auto second = SplitStatePair(state, cond, m.vocoder, cfg, noise);
  CHECK(second.first == 7);
  CHECK(second.second == 24);
  const double h2[] = {0.122007291, 0.506306015, -0.0605814048, -0.109349911};
  for (int i = 0; i < 4; ++i) CHECK(state.h[i] == doctest::Approx(h2[i]).epsilon(1e-5));
}

TEST_CASE("split-state pair equals the naive recomputation bit for bit") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    io::RunConfig rc = testing::TinyConfig();
    rc.vocoder.hidden = 2 * static_cast<int>(2 + rng() % 20);
    rc.vocoder.embed_dim = static_cast<int>(2 + rng() % 6);
    rc.vocoder.head_hidden = static_cast<int>(3 + rng() % 20);
    const auto m = MakeTinyModels(1000 + trial, rc);
    const auto& cfg = m.cfg.vocoder;
    std::normal_distribution<float> d(0.0f, 0.6f);
    auto a = VocoderState::Initial(cfg);
    for (float& x : a.h) x = d(rng);
    a.prev_code = static_cast<int>(rng() % 256);
    std::vector<float> cond(cfg.gate_rows());
    for (float& x : cond) x = d(rng);
    auto b = a;
    std::vector<float> g(8 * 512);
    FillGumbel(g, rng(), 0);
    NoiseBuffer na(g), nb(g);
    for (int pair = 0; pair < 4; ++pair) {
      const auto pa = SplitStatePair(a, cond, m.vocoder, cfg, na);
      const auto pb = ReferencePair(b, cond, m.vocoder, cfg, nb);
      REQUIRE(pa.first == pb.first);
      REQUIRE(pa.second == pb.second);
      REQUIRE(SameBits(a.h, b.h));
      REQUIRE(a.prev_code == b.prev_code);
      REQUIRE(na.cursor() == nb.cursor());
    }
  }
}

TEST_CASE("zero weights halve the hidden state") {
  const auto m = MakeTinyModels(5);
  io::WeightContainer zero;
  for (const auto& [name, t] : m.container.tensors()) {
    io::Tensor z = t;
    std::fill(z.values.begin(), z.values.end(), 0.0f);
    zero.Add(name, std::move(z));
  }
  const auto w = io::LoadVocoderWeights(zero, m.cfg.vocoder);
  auto state = VocoderState::Initial(m.cfg.vocoder);
  state.h = {0.8f, -0.6f, 0.2f, 1.0f};
  const auto before = state.h;
  NoiseBuffer noise(std::vector<float>(512, 0.0f));
  SplitStatePair(state, std::vector<float>(12, 0.0f), w, m.cfg.vocoder, noise);
  for (int i = 0; i < 4; ++i) CHECK(state.h[i] == 0.5f * before[i]);
  CHECK(ConditionFrame(std::vector<float>(80, 0.0f), w) ==
        std::vector<float>(12, 0.0f));
}

TEST_CASE("pair operation counts") {
  const auto m = MakeTinyModels(5);
  const auto& cfg = m.cfg.vocoder;
  const auto cond = Linspace(-0.3, 0.3, 12);
  auto a = VocoderState::Initial(cfg);
  auto b = a;
  NoiseBuffer na(std::vector<float>(512, 0.0f)), nb(std::vector<float>(512, 0.0f));
  VocoderCounters split, ref;
  SplitStatePair(a, cond, m.vocoder, cfg, na, &split);
  ReferencePair(b, cond, m.vocoder, cfg, nb, &ref);
  CHECK(split.recurrent.matvec_count == 1);
  CHECK(split.recurrent.matvec_macs == 12 * 4);
  CHECK(split.head.head_evals == 2);
  CHECK(ref.recurrent.matvec_count == 2);
  CHECK(na.cursor() == 2 * 256);
  NoiseBuffer shortage(std::vector<float>(300, 0.0f));
  CHECK_THROWS_AS(SplitStatePair(a, cond, m.vocoder, cfg, shortage),
                  NoiseExhaustedError);
}

TEST_CASE("frame synthesis counts and the conditioning cache") {
  std::mt19937_64 rng(42);
  const auto m = MakeTinyModels(11);
  const auto& cfg = m.cfg.vocoder;
  const auto mel = RandomMel(rng, 6, 80);
  std::vector<std::uint8_t> codes[2];
  VocoderCounters counters[2];
  for (int cache = 0; cache < 2; ++cache) {
    auto state = VocoderState::Initial(cfg);
    for (int f = 0; f < 6; ++f) {
      auto noise = FrameNoise(cfg, 99, f);
      const auto c = SynthFrame(
          state, std::span<const float>(mel).subspan(f * 80, 80), f, m.vocoder,
          cfg, noise, cache == 1, &counters[cache]);
      REQUIRE(c.size() == 240);
      CHECK(noise.remaining() == 0);
      codes[cache].insert(codes[cache].end(), c.begin(), c.end());
    }
  }
  CHECK(codes[0] == codes[1]);
  CHECK(counters[1].conditioning.matvec_count == 6);
  CHECK(counters[0].conditioning.matvec_count == 6 * 120);
  CHECK(counters[1].recurrent.matvec_count == 6 * 120);
  CHECK(counters[1].head.head_evals == 6 * 240);

  signal::MelSpectrogram one_frame;
  one_frame.values = std::vector<float>(mel.begin(), mel.begin() + 80);
  VocoderCounters base;
  PerSampleBaseline(one_frame, m.baseline, cfg, signal::SignalConfig{}, 1, &base);
  CHECK(base.recurrent.matvec_count == 240);
  CHECK(base.recurrent.matvec_macs == 2 * counters[1].recurrent.matvec_macs / 6);
}

TEST_CASE("conditioning vectors are pure") {
  std::mt19937_64 rng(43);
  const auto m = MakeTinyModels(12);
  const auto frame = RandomMel(rng, 1, 80);
  CHECK(SameBits(ConditionFrame(frame, m.vocoder), ConditionFrame(frame, m.vocoder)));
}

TEST_CASE("gumbel-max and cdf samplers") {
  std::vector<float> logits(8, -1e9f);
  logits[5] = 0.0f;
  std::vector<float> g(8);
  for (std::uint64_t s = 0; s < 50; ++s) {
    FillGumbel(g, s, 0);
    CHECK(GumbelMax(logits, g) == 5);
  }
  std::mt19937_64 rng(44);
  std::normal_distribution<float> d(0.0f, 2.0f);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<float> l(16), shifted(16), noise(16);
    const float c = d(rng);
    for (int i = 0; i < 16; ++i) {
      l[i] = d(rng);
      shifted[i] = l[i] + c;
    }
    FillGumbel(noise, trial, 1);
    CHECK(GumbelMax(l, noise) == GumbelMax(shifted, noise));
  }
  CHECK(CdfSample(std::vector<float>{0, 0, 0.5f, 0.5f}, 0.0) == 2);
  for (double u : {0.0, 0.3, 0.999}) {
    CHECK(CdfSample(std::vector<float>{0, 1, 0}, u) == 1);
  }
  CHECK_THROWS_AS(CdfSample(std::vector<float>{0.5f, 0.2f}, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(CdfSample(std::vector<float>{1.5f, -0.5f}, 0.1),
                  std::invalid_argument);
}

TEST_CASE("gumbel noise is deterministic and well formed") {
  std::vector<float> a(4096), b(4096), c(4096);
  FillGumbel(a, 7, 3);
  FillGumbel(b, 7, 3);
  FillGumbel(c, 7, 4);
  CHECK(SameBits(a, b));
  CHECK_FALSE(SameBits(a, c));
  double mean = 0;
  for (float x : a) {
    REQUIRE(std::isfinite(x));
    mean += x;
  }
  mean /= a.size();
  CHECK(mean == doctest::Approx(0.5772).epsilon(0.1));

  const VocoderConfig cfg;
  NoiseStream plain(cfg, 5, 2, false), ahead(cfg, 5, 2, true);
  for (int f = 0; f < 3; ++f) {
    const auto x = plain.Next();
    const auto y = ahead.Next();
    const auto z = FrameNoise(cfg, 5, 2 + f);
    CHECK(x.values().size() == cfg.noise_per_frame());
    CHECK(std::equal(x.values().begin(), x.values().end(), y.values().begin()));
    CHECK(std::equal(x.values().begin(), x.values().end(), z.values().begin()));
  }
  CHECK(plain.next_frame() == 5);
}

TEST_CASE("synthesis length, determinism and chunking") {
  std::mt19937_64 rng(45);
  auto m = MakeTinyModels(13);
  signal::MelSpectrogram mel;
  mel.values = RandomMel(rng, 100, 80);
  const signal::SignalConfig sig;
  const auto a = Synth(mel, m.vocoder, m.cfg.vocoder, sig, 3);
  CHECK(a.samples.size() == 24000);
  CHECK(a.sample_rate == 24000);
  CHECK(a.duration_seconds() == doctest::Approx(1.0));
  for (float s : a.samples) REQUIRE(std::isfinite(s));
  CHECK(SameBits(a.samples, Synth(mel, m.vocoder, m.cfg.vocoder, sig, 3).samples));
  CHECK_FALSE(SameBits(a.samples, Synth(mel, m.vocoder, m.cfg.vocoder, sig, 4).samples));

  SynthOptions options;
  options.cache_conditioning = false;
  options.prefetch_noise = true;
  CHECK(SameBits(a.samples,
                 Synth(mel, m.vocoder, m.cfg.vocoder, sig, 3, options).samples));

  VocoderSession session(m.vocoder, m.cfg.vocoder, sig, 3);
  std::vector<float> pieces;
  std::size_t frame = 0;
  for (std::size_t len : {1u, 10u, 3u, 86u}) {
    const auto out = session.Process(
        std::span<const float>(mel.values).subspan(frame * 80, len * 80));
    CHECK(out.size() == 240 * len);
    pieces.insert(pieces.end(), out.begin(), out.end());
    frame += len;
  }
  CHECK(session.frames_done() == 100);
  CHECK(SameBits(pieces, a.samples));

  const auto b = PerSampleBaseline(mel, m.baseline, m.cfg.vocoder, sig, 3);
  CHECK(b.samples.size() == 24000);
  CHECK(SameBits(b.samples,
                 PerSampleBaseline(mel, m.baseline, m.cfg.vocoder, sig, 3).samples));
}

TEST_CASE("vocoder configuration checks") {
  VocoderConfig cfg;
  cfg.hidden = 7;
  CHECK_THROWS(cfg.Validate());
  VocoderConfig classes;
  classes.classes = 128;
  CHECK_THROWS(classes.Validate());
  auto m = MakeTinyModels(5);
  m.vocoder.recurrent = tensor::Matrix(12, 3);
  CHECK_THROWS(m.vocoder.Validate(m.cfg.vocoder));
}

}  // namespace
}  // namespace ntts::vocoder
