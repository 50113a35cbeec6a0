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
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ntts/signal.h"

namespace ntts::signal {
namespace {

AudioBuffer Buffer(std::vector<float> samples, int rate = 24000) {
  AudioBuffer b;
  b.sample_rate = rate;
  b.samples = std::move(samples);
  return b;
}

AudioBuffer Tone(double hz, double amplitude, std::size_t n, int rate = 24000) {
  AudioBuffer b;
  b.sample_rate = rate;
  b.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.samples[i] = static_cast<float>(
        amplitude * std::sin(2 * std::numbers::pi * hz * i / rate));
  }
  return b;
}

double DftMagnitude(const std::vector<float>& x, double hz, int rate) {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += static_cast<double>(x[i]) *
           std::polar(1.0, -2 * std::numbers::pi * hz * i / rate);
  }
  return std::abs(acc);
}

TEST_CASE("pre-emphasis hand examples") {
  const auto y = Preemphasize(Buffer({1, 1, 1}), 0.86f).samples;
  CHECK(y[0] == 1.0f);
  CHECK(y[1] == doctest::Approx(0.14).epsilon(1e-6));
  CHECK(y[2] == doctest::Approx(0.14).epsilon(1e-6));
  const std::vector<float> x{0.3f, -0.7f, 0.1f};
  CHECK(Preemphasize(Buffer(x), 0.0f).samples == x);
  CHECK(Preemphasize(Buffer({0, 0, 0, 0}), 0.86f).samples ==
        std::vector<float>(4, 0.0f));
  CHECK(Deemphasize(Buffer(x), 0.0f).samples == x);
  const auto d = Deemphasize(Buffer({1, 0, 0}), 0.5f).samples;
  CHECK(d == std::vector<float>{1.0f, 0.5f, 0.25f});
}

TEST_CASE("de-emphasis inverts pre-emphasis") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  for (int trial = 0; trial < 20; ++trial) {
    AudioBuffer x;
    x.samples.resize(10000);
    for (float& s : x.samples) s = u(rng);
    const auto back = Deemphasize(Preemphasize(x, 0.86f), 0.86f);
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
      REQUIRE(std::abs(back.samples[i] - x.samples[i]) <= 1e-6);
    }
  }
}

TEST_CASE("streaming de-emphasis matches the whole-signal form") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  AudioBuffer y;
  y.samples.resize(1000);
  for (float& s : y.samples) s = u(rng);
  const auto whole = Deemphasize(y, 0.86f).samples;
  Deemphasizer d(0.86f);
  std::vector<float> pieces = y.samples;
  std::size_t pos = 0;
  for (std::size_t len : {1u, 7u, 240u, 2u, 750u}) {
    d.Process(std::span<float>(pieces).subspan(pos, len));
    pos += len;
  }
  CHECK(pieces == whole);
}

TEST_CASE("mu-law hand examples and reference values") {
  CHECK(MulawEncode(1.0f) == 255);
  CHECK(MulawEncode(-1.0f) == 0);
  CHECK(MulawEncode(0.0f) == 128);
  CHECK(MulawEncode(3.0f) == 255);
  CHECK(MulawEncode(-3.0f) == 0);
  CHECK(MulawDecode(255) == doctest::Approx(1.0));
  CHECK(MulawDecode(0) == doctest::Approx(-1.0));
  const float samples[] = {-0.9f, -0.25f, -0.001f, 0.001f, 0.03f, 0.5f, 0.77f};
  const int codes[] = {2, 32, 122, 133, 177, 239, 249};
  for (int i = 0; i < 7; ++i) CHECK(MulawEncode(samples[i]) == codes[i]);
  const int dcodes[] = {1, 64, 127, 129, 200, 254};
  const double decoded[] = {-0.957273709, -0.0581450039, -8.62115957e-05,
                            0.000264362269, 0.0878802262, 0.957273709};
  for (int i = 0; i < 6; ++i) {
    CHECK(MulawDecode(dcodes[i]) == doctest::Approx(decoded[i]).epsilon(1e-5));
  }
  CHECK_THROWS_AS(MulawDecode(256), std::out_of_range);
  CHECK_THROWS_AS(MulawDecode(-1), std::out_of_range);
}

TEST_CASE("mu-law grid properties") {
  int prev = -1;
  double worst = 0;
  for (int i = 0; i <= 10000; ++i) {
    const float s = -1.0f + 2.0f * static_cast<float>(i) / 10000.0f;
    const int c = MulawEncode(s);
    CHECK(c >= prev);
    prev = c;
    worst = std::max(worst, double{std::abs(MulawDecode(c) - s)});
  }
  CHECK(worst <= 0.025);
  for (int c = 0; c < 256; ++c) {
    CHECK(std::abs(MulawDecode(255 - c) + MulawDecode(c)) <= 1e-6);
  }
}

TEST_CASE("upsampling hand examples") {
  CHECK(Upsample48k(Buffer({0, 1})).samples ==
        std::vector<float>{0, 0.5f, 1, 1});
  const auto flat = Upsample48k(Buffer(std::vector<float>(9, 0.3f)));
  CHECK(flat.sample_rate == 48000);
  CHECK(flat.samples == std::vector<float>(18, 0.3f));
  CHECK_THROWS(Upsample48k(Buffer({0, 1}, 16000)));
}

TEST_CASE("upsampling keeps even samples and images a tone at the predicted gain") {
  const auto x = Tone(3000.0, 1.0, 2400);
  const auto y = Upsample48k(x);
  REQUIRE(y.samples.size() == 4800);
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    REQUIRE(y.samples[2 * i] == x.samples[i]);
  }
  const double gain_db =
      20 * std::log10(DftMagnitude(y.samples, 21000, 48000) /
                      DftMagnitude(y.samples, 3000, 48000));
  CHECK(std::abs(gain_db + 28.053529) <= 1.0);
}

TEST_CASE("mel scale round trip") {
  for (double hz : {0.0, 100.0, 1000.0, 7000.0, 12000.0}) {
    CHECK(MelToHz(HzToMel(hz)) == doctest::Approx(hz).epsilon(1e-9));
  }
  CHECK(HzToMel(700.0) == doctest::Approx(2595 * std::log10(2.0)));
}

TEST_CASE("filterbank shape and coverage") {
  const FeatureConfig cfg;
  const auto bank = BuildMelFilterbank(cfg, 24000);
  REQUIRE(bank.rows() == 80);
  REQUIRE(bank.cols() == 513);
  const auto centers = MelCenterFrequencies(cfg);
  REQUIRE(centers.size() == 80);
  for (std::size_t m = 0; m < bank.rows(); ++m) {
    float peak = 0;
    for (std::size_t k = 0; k < bank.cols(); ++k) {
      const double hz = k * 24000.0 / 1024;
      if (hz < cfg.fmin || hz > cfg.fmax) CHECK(bank.at(m, k) == 0.0f);
      peak = std::max(peak, bank.at(m, k));
    }
    CHECK(peak > 0.0f);
  }
  for (std::size_t k = 0; k < bank.cols(); ++k) {
    const double hz = k * 24000.0 / 1024;
    if (hz < centers.front() || hz > centers.back()) continue;
    float total = 0;
    for (std::size_t m = 0; m < bank.rows(); ++m) total += bank.at(m, k);
    CHECK(total > 0.0f);
  }
  const double ref[] = {0, 0.0973342973, 0.739977124, 0.630828611};
  for (int i = 0; i < 4; ++i) {
    CHECK(bank.at(10, 12 + i) == doctest::Approx(ref[i]).epsilon(1e-5));
  }
}

TEST_CASE("mel extraction matches float64 reference values") {
  AudioBuffer x;
  x.samples.resize(2400);
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    const double t = static_cast<double>(i) / 24000;
    x.samples[i] = static_cast<float>(0.5 * std::sin(2 * std::numbers::pi * 440 * t) +
                                      0.25 * std::sin(2 * std::numbers::pi * 1830 * t));
  }
  const auto mel = ExtractMel(x, FeatureConfig{}, SignalConfig{});
  REQUIRE(mel.n_frames() == 10);
  struct Point {
    std::size_t frame, bin;
    double value;
  };
  const Point points[] = {
      {0, 0, 0.419460},  {0, 10, 1.632097}, {0, 40, 1.016031},
      {0, 79, 1.141201}, {5, 10, -1.159574}, {5, 79, -11.512925},
      {9, 0, -1.660276}, {9, 10, -0.589170}, {9, 40, -1.128300},
      {9, 79, -2.941621},
  };
  for (const Point& p : points) {
    CAPTURE(p.frame);
    CAPTURE(p.bin);
    CHECK(mel.frame(p.frame)[p.bin] == doctest::Approx(p.value).epsilon(2e-4));
  }
}

TEST_CASE("mel extraction contracts") {
  const FeatureConfig cfg;
  const SignalConfig sig;
  const auto silent = ExtractMel(Buffer(std::vector<float>(4800, 0.0f)), cfg, sig);
  CHECK(silent.n_frames() == 20);
  for (float v : silent.values) CHECK(v == doctest::Approx(std::log(1e-5)));
  CHECK(ExtractMel(Tone(200, 0.5, 24000), cfg, sig).n_frames() == 100);
  CHECK(ExtractMel(Tone(200, 0.5, 24001), cfg, sig).n_frames() == 101);

  const auto mel = ExtractMel(Tone(1000, 0.5, 24000), cfg, sig);
  const auto centers = MelCenterFrequencies(cfg);
  const auto frame = mel.frame(50);
  const auto best = static_cast<std::size_t>(
      std::max_element(frame.begin(), frame.end()) - frame.begin());
  double spacing = 0;
  for (std::size_t m = 1; m < centers.size(); ++m) {
    if (centers[m - 1] <= 1000 && centers[m] >= 1000) {
      spacing = centers[m] - centers[m - 1];
    }
  }
  CHECK(std::abs(centers[best] - 1000.0) <= spacing);
}

TEST_CASE("config validation") {
  SignalConfig sig;
  sig.preemphasis = 1.0f;
  CHECK_THROWS_AS(sig.Validate(), std::invalid_argument);
  FeatureConfig f;
  f.fft_size = 500;
  CHECK_THROWS_AS(f.Validate(24000), std::invalid_argument);
}

}  // namespace
}  // namespace ntts::signal
