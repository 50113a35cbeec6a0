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

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ntts/signal.h"

namespace ntts::signal {
namespace {

constexpr float kLogFloor = 1e-5f;

// FFTW's planner is not thread-safe; execution on a plan is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

class RealFft {
 public:
  explicit RealFft(int n)
      : n_(n),
        in_(fftwf_alloc_real(n), fftwf_free),
        out_(fftwf_alloc_complex(n / 2 + 1), fftwf_free) {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan_ = fftwf_plan_dft_r2c_1d(n, in_.get(), out_.get(), FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::runtime_error("fftw: planning failed");
  }
  ~RealFft() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftwf_destroy_plan(plan_);
  }
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  float* input() { return in_.get(); }
  void Execute() { fftwf_execute(plan_); }
  float Magnitude(int bin) const {
    const fftwf_complex& c = out_.get()[bin];
    return std::hypot(c[0], c[1]);
  }

 private:
  int n_;
  std::unique_ptr<float, decltype(&fftwf_free)> in_;
  std::unique_ptr<fftwf_complex, decltype(&fftwf_free)> out_;
  fftwf_plan plan_ = nullptr;
};

// Reflect-without-edge-repeat index into [0, n).
std::size_t ReflectIndex(long long i, long long n) {
  if (n == 1) return 0;
  const long long period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  if (i >= n) i = period - i;
  return static_cast<std::size_t>(i);
}

}  // namespace

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> MelCenterFrequencies(const FeatureConfig& cfg) {
  const double lo = HzToMel(cfg.fmin);
  const double hi = HzToMel(cfg.fmax);
  std::vector<double> centers(cfg.n_mels);
  for (int m = 0; m < cfg.n_mels; ++m) {
    centers[m] = MelToHz(lo + (hi - lo) * (m + 1) / (cfg.n_mels + 1));
  }
  return centers;
}

tensor::Matrix BuildMelFilterbank(const FeatureConfig& cfg, int sample_rate) {
  cfg.Validate(sample_rate);
  const int n_bins = cfg.fft_size / 2 + 1;
  const double lo = HzToMel(cfg.fmin);
  const double hi = HzToMel(cfg.fmax);
  std::vector<double> edges(cfg.n_mels + 2);
  for (int i = 0; i < cfg.n_mels + 2; ++i) {
    edges[i] = MelToHz(lo + (hi - lo) * i / (cfg.n_mels + 1));
  }
  tensor::Matrix bank(cfg.n_mels, n_bins, tensor::Layout::kColumnMajor);
  for (int m = 0; m < cfg.n_mels; ++m) {
    const double left = edges[m];
    const double center = edges[m + 1];
    const double right = edges[m + 2];
    bool any = false;
    for (int k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / cfg.fft_size;
      if (f < cfg.fmin || f > cfg.fmax) continue;
      double w = 0.0;
      if (f > left && f <= center) {
        w = (f - left) / (center - left);
      } else if (f > center && f < right) {
        w = (right - f) / (right - center);
      }
      if (w > 0.0) {
        bank.at(m, k) = static_cast<float>(w);
        any = true;
      }
    }
    if (!any) {
      throw std::invalid_argument(
          "BuildMelFilterbank: filter " + std::to_string(m) +
          " has no FFT bin in its support; n_mels too large for fft_size");
    }
  }
  return bank;
}

MelSpectrogram ExtractMel(const AudioBuffer& x, const FeatureConfig& cfg,
                          const SignalConfig& sig) {
  if (x.samples.empty()) throw std::invalid_argument("ExtractMel: empty input");
  if (x.sample_rate != sig.sample_rate) {
    throw std::invalid_argument("ExtractMel: input rate " +
                                std::to_string(x.sample_rate) +
                                " does not match " +
                                std::to_string(sig.sample_rate));
  }
  const tensor::Matrix bank = BuildMelFilterbank(cfg, sig.sample_rate);
  const AudioBuffer emphasized = Preemphasize(x, sig.preemphasis);
  const auto& s = emphasized.samples;
  const long long len = static_cast<long long>(s.size());

  std::vector<float> window(cfg.frame_length);
  for (int n = 0; n < cfg.frame_length; ++n) {
    window[n] = static_cast<float>(
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / cfg.frame_length));
  }
  const int window_offset = (cfg.fft_size - cfg.frame_length) / 2;
  const long long pad = cfg.fft_size / 2;
  const std::size_t n_frames = (s.size() + cfg.hop - 1) / cfg.hop;
  const int n_bins = cfg.fft_size / 2 + 1;

  RealFft fft(cfg.fft_size);
  std::vector<float> magnitude(n_bins);
  MelSpectrogram mel;
  mel.n_mels = cfg.n_mels;
  mel.values.resize(n_frames * cfg.n_mels);
  for (std::size_t t = 0; t < n_frames; ++t) {
    float* in = fft.input();
    std::fill(in, in + cfg.fft_size, 0.0f);
    const long long start = static_cast<long long>(t) * cfg.hop - pad;
    for (int n = 0; n < cfg.frame_length; ++n) {
      const long long i = start + window_offset + n;
      in[window_offset + n] = s[ReflectIndex(i, len)] * window[n];
    }
    fft.Execute();
    for (int k = 0; k < n_bins; ++k) magnitude[k] = fft.Magnitude(k);
    std::span<float> out = mel.frame(t);
    tensor::MatVecInto(bank, magnitude, out);
    for (float& v : out) v = std::log(std::max(v, kLogFloor));
  }
  return mel;
}

}  // namespace ntts::signal
