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
#include <cmath>
#include <stdexcept>
#include <string>

#include "ntts/signal.h"

namespace ntts::signal {

void SignalConfig::Validate() const {
  if (sample_rate <= 0) {
    throw std::invalid_argument("signal.sample_rate must be positive");
  }
  if (!(preemphasis >= 0.0f && preemphasis < 1.0f)) {
    throw std::invalid_argument("signal.preemphasis must be in [0, 1)");
  }
  if (mu <= 0) throw std::invalid_argument("signal.mu must be positive");
  if (quantization_levels != mu + 1) {
    throw std::invalid_argument("signal.quantization_levels must equal mu + 1");
  }
  if (quantization_levels != 256) {
    throw std::invalid_argument("signal.quantization_levels must be 256");
  }
}

void FeatureConfig::Validate(int sample_rate) const {
  if (hop <= 0 || frame_length <= 0 || fft_size <= 0 || n_mels <= 0) {
    throw std::invalid_argument("features: sizes must be positive");
  }
  if (!(hop <= frame_length && frame_length <= fft_size)) {
    throw std::invalid_argument(
        "features: require hop <= frame_length <= fft_size");
  }
  if (fmin < 0.0f || fmin >= fmax || fmax > sample_rate / 2.0f) {
    throw std::invalid_argument(
        "features: require 0 <= fmin < fmax <= sample_rate / 2");
  }
}

AudioBuffer Preemphasize(const AudioBuffer& x, float a) {
  AudioBuffer y{x.sample_rate, std::vector<float>(x.samples.size())};
  float prev = 0.0f;
  for (std::size_t n = 0; n < x.samples.size(); ++n) {
    y.samples[n] = x.samples[n] - a * prev;
    prev = x.samples[n];
  }
  return y;
}

AudioBuffer Deemphasize(const AudioBuffer& y, float a) {
  AudioBuffer x = y;
  Deemphasizer(a).Process(x.samples);
  return x;
}

void Deemphasizer::Process(std::span<float> samples) {
  for (float& s : samples) {
    s = s + a_ * last_;
    last_ = s;
  }
}

std::uint8_t MulawEncode(float sample, int mu) {
  const double s = std::clamp(static_cast<double>(sample), -1.0, 1.0);
  const double mag = std::log1p(mu * std::abs(s)) / std::log1p(mu);
  const double m = s < 0.0 ? -mag : mag;
  const double code = std::floor((m + 1.0) * 127.5 + 0.5);
  return static_cast<std::uint8_t>(std::clamp(code, 0.0, 255.0));
}

float MulawDecode(int code, int mu) {
  if (code < 0 || code > 255) {
    throw std::out_of_range("MulawDecode: code " + std::to_string(code) +
                            " outside [0, 255]");
  }
  const double m = code / 127.5 - 1.0;
  const double mag = (std::pow(1.0 + mu, std::abs(m)) - 1.0) / mu;
  return static_cast<float>(m < 0.0 ? -mag : mag);
}

AudioBuffer Upsample48k(const AudioBuffer& x) {
  if (x.sample_rate != 24000) {
    throw std::invalid_argument("Upsample48k: input must be 24000 Hz, got " +
                                std::to_string(x.sample_rate));
  }
  const std::size_t n = x.samples.size();
  AudioBuffer y{48000, std::vector<float>(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    const float next = i + 1 < n ? x.samples[i + 1] : x.samples[i];
    y.samples[2 * i] = x.samples[i];
    y.samples[2 * i + 1] = (x.samples[i] + next) * 0.5f;
  }
  return y;
}

}  // namespace ntts::signal
