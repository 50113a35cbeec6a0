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

#ifndef NTTS_SIGNAL_H_
#define NTTS_SIGNAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ntts/tensor.h"

namespace ntts::signal {

struct SignalConfig {
  int sample_rate = 24000;
  float preemphasis = 0.86f;
  int mu = 255;
  int quantization_levels = 256;

  // Throws std::invalid_argument when a field is out of range.
  void Validate() const;
};

struct FeatureConfig {
  int frame_length = 600;  // 25 ms at 24 kHz
  int hop = 240;           // 10 ms at 24 kHz
  int fft_size = 1024;
  int n_mels = 80;
  float fmin = 0.0f;
  float fmax = 12000.0f;

  void Validate(int sample_rate) const;
};

struct AudioBuffer {
  int sample_rate = 24000;
  std::vector<float> samples;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Frame-major log-mel features.
struct MelSpectrogram {
  std::size_t n_mels = 80;
  std::vector<float> values;  // n_frames * n_mels

  std::size_t n_frames() const { return n_mels ? values.size() / n_mels : 0; }
  std::span<const float> frame(std::size_t i) const {
    return std::span<const float>(values).subspan(i * n_mels, n_mels);
  }
  std::span<float> frame(std::size_t i) {
    return std::span<float>(values).subspan(i * n_mels, n_mels);
  }
};

// y[n] = x[n] - a * x[n-1], x[-1] = 0.
AudioBuffer Preemphasize(const AudioBuffer& x, float a);
// x[n] = y[n] + a * x[n-1], x[-1] = 0.
AudioBuffer Deemphasize(const AudioBuffer& y, float a);

// Streaming de-emphasis; feeding a signal in pieces gives the same samples
// as Deemphasize over the whole signal.
class Deemphasizer {
 public:
  explicit Deemphasizer(float a) : a_(a) {}
  void Process(std::span<float> samples);

 private:
  float a_;
  float last_ = 0.0f;
};

// 8-bit mu-law companding over [-1, 1]. Codes are the affine map
// floor((m + 1) * 127.5 + 0.5), antisymmetric about 127.5.
std::uint8_t MulawEncode(float sample, int mu = 255);
// Throws std::out_of_range for codes outside [0, 255].
float MulawDecode(int code, int mu = 255);

// 2x linear interpolation: y[2i] = x[i], y[2i+1] = (x[i] + x[i+1]) / 2,
// repeating the last sample past the end. Throws unless x is 24 kHz.
AudioBuffer Upsample48k(const AudioBuffer& x);

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular mel filters, n_mels x (fft_size / 2 + 1). Throws
// std::invalid_argument when a filter has no positive weight.
tensor::Matrix BuildMelFilterbank(const FeatureConfig& cfg, int sample_rate);
// Center frequency in Hz of each filter.
std::vector<double> MelCenterFrequencies(const FeatureConfig& cfg);

// Pre-emphasis, centered STFT (periodic Hann, reflection padding), magnitude,
// mel projection and log(max(x, 1e-5)). Produces ceil(len / hop) frames.
MelSpectrogram ExtractMel(const AudioBuffer& x, const FeatureConfig& cfg,
                          const SignalConfig& sig);

}  // namespace ntts::signal

#endif  // NTTS_SIGNAL_H_
