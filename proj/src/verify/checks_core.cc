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
#include <complex>
#include <numbers>
#include <numeric>

#include "ntts/attention.h"
#include "ntts/signal.h"
#include "ntts/tensor.h"
#include "support.h"

namespace ntts::verify {
namespace {

using tensor::Layout;
using tensor::Matrix;

std::vector<float> RandomVector(std::mt19937_64& rng, std::size_t n,
                                float scale = 1.0f) {
  std::uniform_real_distribution<float> d(-scale, scale);
  std::vector<float> v(n);
  for (float& x : v) x = d(rng);
  return v;
}

Matrix RandomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                    Layout layout) {
  return Matrix(rows, cols, RandomVector(rng, rows * cols), layout);
}

// ---- tensor ----

Outcome LayoutEquivalence() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> dim(1, 96);
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const Matrix col = RandomMatrix(rng, r, c, Layout::kColumnMajor);
    const Matrix row = col.WithLayout(Layout::kRowMajor);
    const std::vector<float> x = RandomVector(rng, c);
    t.Expect(BitEqual(tensor::MatVec(col, x), tensor::MatVec(row, x)),
             Str("layouts differ for shape ", r, "x", c));
  }
  return t.Done("100 random shapes bitwise equal");
}

Outcome Linearity() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> dim(1, 64);
  std::uniform_real_distribution<float> coef(-2.0f, 2.0f);
  Tally t;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const Matrix m = RandomMatrix(rng, r, c, Layout::kColumnMajor);
    const std::vector<float> x = RandomVector(rng, c), y = RandomVector(rng, c);
    const float a = coef(rng), b = coef(rng);
    std::vector<float> combo(c);
    for (std::size_t i = 0; i < c; ++i) combo[i] = a * x[i] + b * y[i];
    const auto lhs = tensor::MatVec(m, combo);
    const auto mx = tensor::MatVec(m, x), my = tensor::MatVec(m, y);
    for (std::size_t i = 0; i < r; ++i) {
      const double rhs = double(a) * mx[i] + double(b) * my[i];
      // Relative to the magnitude of the terms being combined.
      double scale = std::abs(double(a) * mx[i]) + std::abs(double(b) * my[i]);
      for (std::size_t j = 0; j < c; ++j) {
        scale = std::max(scale, std::abs(double(m.at(i, j)) * combo[j]));
      }
      const double rel = std::abs(lhs[i] - rhs) / std::max(scale, 1e-30);
      worst = std::max(worst, rel);
      t.Expect(rel <= 1e-5, Str("relative error ", rel, " at trial ", trial));
    }
  }
  return t.Done(Str("worst relative error ", worst));
}

Outcome SoftmaxProperties() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  std::uniform_real_distribution<float> shift(-50.0f, 50.0f);
  Tally t;
  for (int trial = 0; trial < 200; ++trial) {
    const auto logits = RandomVector(rng, len(rng), 20.0f);
    const auto p = tensor::Softmax(logits);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    t.Expect(std::abs(sum - 1.0) <= 1e-6, Str("softmax sums to ", sum));
    t.Expect(std::all_of(p.begin(), p.end(), [](float v) { return v >= 0; }),
             "negative probability");
    const float s = shift(rng);
    std::vector<float> shifted = logits;
    for (float& v : shifted) v += s;
    const auto q = tensor::Softmax(shifted);
    for (std::size_t i = 0; i < p.size(); ++i) {
      t.Expect(std::abs(p[i] - q[i]) <= 1e-6, "softmax not shift invariant");
    }
  }
  const auto half = tensor::Softmax(std::vector<float>{0.0f, 0.0f});
  t.Expect(half[0] == 0.5f && half[1] == 0.5f, "softmax([0,0])");
  const auto q =
      tensor::Softmax(std::vector<float>{std::log(1.0f), std::log(3.0f)});
  t.Expect(std::abs(q[0] - 0.25f) <= 1e-6 && std::abs(q[1] - 0.75f) <= 1e-6,
           "softmax([ln 1, ln 3])");
  return t.Done("sum and shift invariance within 1e-6 on 200 vectors");
}

Outcome CounterExactness() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> dim(1, 40), reps(1, 30);
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng), n = reps(rng);
    const Matrix m = RandomMatrix(rng, r, c, Layout::kColumnMajor);
    const auto x = RandomVector(rng, c);
    tensor::OpCounters counters;
    for (std::size_t i = 0; i < n; ++i) tensor::MatVec(m, x, &counters);
    t.Expect(counters.matvec_count == n && counters.matvec_macs == n * r * c,
             Str("counters after ", n, " matvecs of ", r, "x", c));
    counters.Reset();
    t.Expect(counters.matvec_count == 0 && counters.matvec_macs == 0,
             "reset");
  }
  return t.Done("matvec_count = N and matvec_macs = N*r*c exactly");
}

Outcome TensorExamples() {
  Tally t;
  const std::vector<float> v = {1, 2, 3};
  t.Expect(tensor::MatVec(Matrix::Identity(3), v) == v, "identity");
  t.Expect(tensor::MatVec(Matrix(2, 3), v) == std::vector<float>{0, 0},
           "zero matrix");
  const std::vector<float> m22 = {1, 2, 3, 4};
  for (Layout layout : {Layout::kRowMajor, Layout::kColumnMajor}) {
    t.Expect(tensor::MatVec(Matrix(2, 2, m22, layout), std::vector<float>{1, 1}) ==
                 std::vector<float>{3, 7},
             "[[1,2],[3,4]] x [1,1]");
  }
  const std::vector<float> w = {2};
  t.Expect(tensor::Affine(Matrix(1, 1, w), std::vector<float>{3},
                          std::vector<float>{1}) == std::vector<float>{7},
           "affine [[2]]*[3]+[1]");
  t.Expect(tensor::Argmax(std::vector<float>{1, 3, 2}) == 1, "argmax");
  t.Expect(tensor::Argmax(std::vector<float>{7, 7}) == 0, "argmax tie");
  t.Expect(tensor::Sigmoid(0.0f) == 0.5f, "sigmoid(0)");
  bool threw = false;
  try {
    tensor::MatVec(Matrix(2, 2), v);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  t.Expect(threw, "dimension mismatch must throw");
  return t.Done("hand-evaluated examples hold");
}

// ---- signal ----

Outcome EmphasisRoundTrip() {
  std::mt19937_64 rng(5);
  Tally t;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    signal::AudioBuffer x;
    x.samples = RandomVector(rng, 10000);
    const auto y = signal::Deemphasize(signal::Preemphasize(x, 0.86f), 0.86f);
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
      worst = std::max(worst, double(std::abs(y.samples[i] - x.samples[i])));
    }
  }
  t.Expect(worst <= 1e-6, Str("max round-trip error ", worst));
  const auto pre = signal::Preemphasize({24000, {1, 1, 1}}, 0.86f);
  t.Expect(pre.samples[0] == 1.0f &&
               std::abs(pre.samples[1] - 0.14f) <= 1e-6f &&
               std::abs(pre.samples[2] - 0.14f) <= 1e-6f,
           "preemphasize([1,1,1])");
  const auto de = signal::Deemphasize({24000, {1, 0, 0}}, 0.5f);
  t.Expect(de.samples == std::vector<float>{1.0f, 0.5f, 0.25f},
           "deemphasize([1,0,0], 0.5)");
  return t.Done(Str("100 signals x 10000 samples, max error ", worst));
}

Outcome Mulaw() {
  Tally t;
  double worst = 0.0;
  int prev = -1;
  for (int i = 0; i <= 10000; ++i) {
    const float s = -1.0f + 2.0f * static_cast<float>(i) / 10000.0f;
    const int code = signal::MulawEncode(s);
    t.Expect(code >= prev, Str("encode not monotone at ", s));
    prev = code;
    worst = std::max(worst, double(std::abs(signal::MulawDecode(code) - s)));
  }
  t.Expect(worst <= 0.025, Str("round-trip error ", worst));
  t.Expect(signal::MulawEncode(1.0f) == 255, "encode(1) = 255");
  t.Expect(signal::MulawEncode(-1.0f) == 0, "encode(-1) = 0");
  t.Expect(signal::MulawEncode(0.0f) == 128, "encode(0) = 128");
  t.Expect(signal::MulawDecode(255) == 1.0f, "decode(255) = 1");
  t.Expect(signal::MulawDecode(0) == -1.0f, "decode(0) = -1");
  for (int c = 0; c < 256; ++c) {
    t.Expect(std::abs(signal::MulawDecode(255 - c) + signal::MulawDecode(c)) <=
                 1e-6,
             Str("decode symmetry at ", c));
  }
  bool threw = false;
  try {
    signal::MulawDecode(256);
  } catch (const std::out_of_range&) {
    threw = true;
  }
  t.Expect(threw, "decode(256) must throw");
  return t.Done(Str("monotone on 10001 points, max round-trip error ", worst));
}

double DftMagnitude(const std::vector<float>& x, double freq, int rate) {
  std::complex<double> acc = 0.0;
  const double w = -2.0 * std::numbers::pi * freq / rate;
  for (std::size_t n = 0; n < x.size(); ++n) {
    acc += double(x[n]) * std::polar(1.0, w * static_cast<double>(n));
  }
  return std::abs(acc);
}

Outcome BandwidthExtension() {
  Tally t;
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    signal::AudioBuffer x{24000, RandomVector(rng, 1 + trial * 97)};
    const auto y = signal::Upsample48k(x);
    t.Expect(y.sample_rate == 48000 && y.samples.size() == 2 * x.samples.size(),
             "output rate and length");
    double ex = 0.0, ey = 0.0;
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
      t.Expect(y.samples[2 * i] == x.samples[i], "even sample changed");
      ex += double(x.samples[i]) * x.samples[i];
    }
    for (float v : y.samples) ey += double(v) * v;
    t.Expect(ey <= 2.0 * ex + 1e-9, "output energy above twice the input");
  }
  const auto two = signal::Upsample48k({24000, {0, 1}});
  t.Expect(two.samples == std::vector<float>{0, 0.5f, 1, 1}, "[0,1] example");

  signal::AudioBuffer tone{24000, std::vector<float>(24000)};
  for (std::size_t n = 0; n < tone.samples.size(); ++n) {
    tone.samples[n] = static_cast<float>(
        std::sin(2.0 * std::numbers::pi * 3000.0 * n / 24000.0));
  }
  const auto up = signal::Upsample48k(tone);
  const double ratio = DftMagnitude(up.samples, 21000.0, 48000) /
                       DftMagnitude(up.samples, 3000.0, 48000);
  const double measured_db = 20.0 * std::log10(ratio);
  const double pi = std::numbers::pi;
  const double expected = (1.0 + std::cos(2.0 * pi * 21000.0 / 48000.0)) /
                          (1.0 + std::cos(2.0 * pi * 3000.0 / 48000.0));
  const double expected_db = 20.0 * std::log10(expected);
  t.Expect(std::abs(measured_db - expected_db) <= 1.0,
           Str("image at ", measured_db, " dB, expected ", expected_db));
  t.Expect(std::abs(measured_db - (-28.1)) <= 1.0,
           Str("image at ", measured_db, " dB, stated -28.1 dB"));
  bool threw = false;
  try {
    signal::Upsample48k({16000, {0, 1}});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  t.Expect(threw, "non-24 kHz input must throw");
  return t.Done(Str("even samples exact; 21 kHz image ", measured_db,
                    " dB (expected ", expected_db, " dB)"));
}

Outcome MelExtraction() {
  Tally t;
  const signal::FeatureConfig cfg;
  const signal::SignalConfig sig;
  const Matrix fb = signal::BuildMelFilterbank(cfg, sig.sample_rate);
  const std::size_t bins = cfg.fft_size / 2 + 1;
  t.Expect(fb.rows() == 80 && fb.cols() == bins, "filterbank shape");
  const auto centers = signal::MelCenterFrequencies(cfg);
  for (std::size_t m = 0; m < fb.rows(); ++m) {
    bool positive = false;
    for (std::size_t k = 0; k < bins; ++k) {
      const float w = fb.at(m, k);
      t.Expect(w >= 0.0f, "negative filter weight");
      const double hz = double(k) * sig.sample_rate / cfg.fft_size;
      if (hz < cfg.fmin || hz > cfg.fmax) t.Expect(w == 0.0f, "out of band");
      positive = positive || w > 0.0f;
    }
    t.Expect(positive, Str("filter ", m, " is empty"));
  }
  for (std::size_t k = 0; k < bins; ++k) {
    const double hz = double(k) * sig.sample_rate / cfg.fft_size;
    if (hz < centers.front() || hz > centers.back()) continue;
    float total = 0.0f;
    for (std::size_t m = 0; m < fb.rows(); ++m) total += fb.at(m, k);
    t.Expect(total > 0.0f, Str("bin ", k, " uncovered"));
  }

  const auto silence =
      signal::ExtractMel({24000, std::vector<float>(24000)}, cfg, sig);
  t.Expect(silence.n_frames() == 100, "1 s -> 100 frames");
  const float floor = std::log(1e-5f);
  t.Expect(std::all_of(silence.values.begin(), silence.values.end(),
                       [&](float v) { return v == floor; }),
           "silence -> log(1e-5)");

  signal::AudioBuffer tone{24000, std::vector<float>(12000)};
  for (std::size_t n = 0; n < tone.samples.size(); ++n) {
    tone.samples[n] = static_cast<float>(
        0.5 * std::sin(2.0 * std::numbers::pi * 1000.0 * n / 24000.0));
  }
  const auto mel = signal::ExtractMel(tone, cfg, sig);
  const auto mid = mel.frame(mel.n_frames() / 2);
  const std::size_t best = tensor::Argmax(mid);
  const double spacing = (centers.back() - centers.front()) /
                         double(centers.size() - 1);
  const double spacing_hz = std::abs(centers[best + 1] - centers[best]);
  t.Expect(std::abs(centers[best] - 1000.0) <= std::max(spacing_hz, spacing),
           Str("1 kHz tone peaks at ", centers[best], " Hz"));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> len(1, 5000);
    const float scale = trial % 2 ? 1.0f : 1e4f;
    const auto m =
        signal::ExtractMel({24000, RandomVector(rng, len(rng), scale)}, cfg, sig);
    t.Expect(std::all_of(m.values.begin(), m.values.end(),
                         [](float v) { return std::isfinite(v); }),
             "non-finite mel value");
  }
  return t.Done(Str("filterbank valid; 1 kHz tone peaks in band centered at ",
                    centers[best], " Hz"));
}

// ---- attention ----

std::vector<float> RandomEnergies(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<float> d(0.0f, 3.0f);
  std::vector<float> e(n);
  for (float& v : e) v = d(rng);
  return e;
}

std::pair<long, long> Support(const std::vector<float>& a) {
  long lo = -1, hi = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0.0f) {
      if (lo < 0) lo = static_cast<long>(i);
      hi = static_cast<long>(i);
    }
  }
  return {lo, hi};
}

Outcome StepwiseInvariants() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> len(1, 24), steps(1, 40);
  Tally t;
  for (int seq = 0; seq < 1000; ++seq) {
    const std::size_t n = len(rng);
    std::vector<float> prev(n, 0.0f);
    prev[0] = 1.0f;
    if (seq % 2 == 1) {
      // Random probability vector as the starting point.
      std::uniform_real_distribution<float> u(0.0f, 1.0f);
      double total = 0.0;
      for (float& v : prev) total += (v = u(rng));
      for (float& v : prev) v = static_cast<float>(v / total);
    }
    for (std::size_t s = 0, m = steps(rng); s < m; ++s) {
      const auto alpha =
          attention::StepStepwiseMonotonic(RandomEnergies(rng, n), prev);
      const double before = std::accumulate(prev.begin(), prev.end(), 0.0);
      const double after = std::accumulate(alpha.begin(), alpha.end(), 0.0);
      t.Expect(std::abs(after - before) <= 1e-6,
               Str("mass ", before, " -> ", after));
      t.Expect(std::abs(after - 1.0) <= 1e-5, Str("sum ", after));
      t.Expect(std::all_of(alpha.begin(), alpha.end(),
                           [](float v) { return v >= 0.0f; }),
               "negative alignment");
      const auto [plo, phi] = Support(prev);
      const auto [alo, ahi] = Support(alpha);
      t.Expect(ahi <= phi + 1, Str("support jumped from ", phi, " to ", ahi));
      t.Expect(alo >= plo, Str("support moved back from ", plo, " to ", alo));
      prev = alpha;
    }
  }
  Tally ex;
  auto close = [](const std::vector<float>& a, const std::vector<float>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > 1e-6f) return false;
    }
    return true;
  };
  const float inf = 1e4f;
  t.Expect(close(attention::StepStepwiseMonotonic(std::vector<float>{inf, inf, inf},
                                                  std::vector<float>{0.2f, 0.3f, 0.5f}),
                 {0.2f, 0.3f, 0.5f}),
           "p = 1 keeps the alignment");
  t.Expect(close(attention::StepStepwiseMonotonic(std::vector<float>{-inf, 0, 0},
                                                  std::vector<float>{1, 0, 0}),
                 {0, 1, 0}),
           "p_0 = 0 advances by one");
  t.Expect(close(attention::StepStepwiseMonotonic(std::vector<float>{0, 0, 0},
                                                  std::vector<float>{0.5f, 0.5f, 0}),
                 {0.25f, 0.5f, 0.25f}),
           "[0.5,0.5,0] example");
  return t.Done("1000 sequences: mass, no-skip and forward-only hold");
}

Outcome MonotonicMass() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> len(1, 24), steps(1, 40);
  Tally t;
  for (int seq = 0; seq < 1000; ++seq) {
    const std::size_t n = len(rng);
    std::vector<float> prev(n, 0.0f);
    prev[0] = 1.0f;
    for (std::size_t s = 0, m = steps(rng); s < m; ++s) {
      const auto alpha = attention::StepMonotonic(RandomEnergies(rng, n), prev);
      const double before = std::accumulate(prev.begin(), prev.end(), 0.0);
      const double after = std::accumulate(alpha.begin(), alpha.end(), 0.0);
      t.Expect(after <= before + 1e-6, Str("mass grew ", before, " -> ", after));
      t.Expect(std::all_of(alpha.begin(), alpha.end(),
                           [](float v) { return v >= 0.0f; }),
               "negative alignment");
      prev = alpha;
    }
  }
  const auto ex = attention::StepMonotonic(std::vector<float>{0, 0},
                                           std::vector<float>{1, 0});
  t.Expect(std::abs(ex[0] - 0.5f) <= 1e-6f && std::abs(ex[1] - 0.25f) <= 1e-6f,
           "prev=[1,0], p=[0.5,0.5] example");
  return t.Done("1000 sequences: mass never increases");
}

Outcome NonNegativeAllVariants() {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::size_t> len(1, 30);
  std::uniform_real_distribution<float> wide(-1e4f, 1e4f);
  Tally t;
  for (auto variant : {attention::AttentionVariant::kLocationSensitive,
                       attention::AttentionVariant::kMonotonic,
                       attention::AttentionVariant::kStepwiseMonotonic}) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = len(rng);
      std::vector<float> e(n), prev(n, 0.0f);
      for (float& v : e) v = trial % 2 ? wide(rng) : RandomEnergies(rng, 1)[0];
      prev[0] = 1.0f;
      const auto a = attention::Step(variant, e, prev);
      t.Expect(a.size() == n, "alignment length");
      t.Expect(std::all_of(a.begin(), a.end(),
                           [](float v) { return v >= 0.0f && std::isfinite(v); }),
               Str("invalid alignment for ", attention::VariantName(variant)));
    }
  }
  return t.Done("entries non-negative and finite for arbitrary energies");
}

Outcome AttentionExamples() {
  Tally t;
  attention::EncoderMemory mem{2, 1, {0.0f, 4.0f}};
  const auto ctx = attention::Context(std::vector<float>{0.25f, 0.75f}, mem);
  t.Expect(ctx.size() == 1 && ctx[0] == 3.0f, "context example");
  const auto ls = attention::StepLocationSensitive(std::vector<float>{0, 0, 0});
  t.Expect(std::all_of(ls.begin(), ls.end(),
                       [](float v) { return std::abs(v - 1.0f / 3) < 1e-6f; }),
           "uniform location-sensitive alignment");

  attention::AttentionWeights w;
  w.query_proj = Matrix(3, 4);
  w.memory_proj = Matrix(3, 2);
  w.location_proj = Matrix(3, 2);
  w.n_kernels = 2;
  w.kernel_width = 3;
  w.location_kernels.assign(2 * 2 * 3, 0.0f);
  w.score_vector.assign(3, 0.0f);
  w.score_bias.assign(3, 0.0f);
  attention::EncoderMemory m5{5, 2, std::vector<float>(10, 1.0f)};
  const auto e = attention::Energies(std::vector<float>(4, 1.0f), m5,
                                     attention::AlignmentState::Initial(5), w);
  t.Expect(e == std::vector<float>(5, 0.0f), "zero weights -> zero energies");

  std::mt19937_64 rng(11);
  w.location_kernels = RandomVector(rng, 12);
  w.location_proj = RandomMatrix(rng, 3, 2, Layout::kColumnMajor);
  w.score_vector = RandomVector(rng, 3);
  auto state = attention::AlignmentState::Initial(5);
  const auto e0 = attention::Energies(std::vector<float>(4, 1.0f), m5, state, w);
  state.alignment = {0.0f, 0.0f, 1.0f, 0.0f, 0.0f};
  const auto e1 = attention::Energies(std::vector<float>(4, 1.0f), m5, state, w);
  t.Expect(e0 != e1, "energies ignore the alignment state");
  attention::EncoderMemory m1{1, 2, {1.0f, 2.0f}};
  t.Expect(attention::Energies(std::vector<float>(4, 1.0f), m1,
                               attention::AlignmentState::Initial(1), w)
                   .size() == 1,
           "single-token memory");
  return t.Done("hand-evaluated examples hold");
}

}  // namespace

std::vector<Check> CoreChecks() {
  return {
      {"tensor.layout_equivalence", "", "row- and column-major matvec agree bitwise", false, LayoutEquivalence},
      {"tensor.linearity", "", "matvec is linear within 1e-5 relative", false, Linearity},
      {"tensor.softmax", "", "softmax sums to 1 and is shift invariant", false, SoftmaxProperties},
      {"tensor.counters", "", "op counters are exact", false, CounterExactness},
      {"tensor.examples", "", "matvec/affine/argmax examples", false, TensorExamples},
      {"signal.emphasis_round_trip", "AC9", "de-emphasis inverts pre-emphasis within 1e-6", false, EmphasisRoundTrip},
      {"signal.mulaw", "AC8", "mu-law monotone, round trip <= 0.025, endpoints, symmetry", false, Mulaw},
      {"signal.bandwidth_extension", "AC10", "2x interpolation keeps even samples; 21 kHz image level", false, BandwidthExtension},
      {"signal.mel", "", "filterbank and mel extraction contracts", false, MelExtraction},
      {"attention.stepwise_invariants", "AC11", "stepwise mass, no-skip and forward-only", false, StepwiseInvariants},
      {"attention.monotonic_mass", "AC11", "monotonic attention never gains mass", false, MonotonicMass},
      {"attention.non_negative", "AC11", "all variants produce non-negative alignments", false, NonNegativeAllVariants},
      {"attention.examples", "", "energies and context examples", false, AttentionExamples},
  };
}

}  // namespace ntts::verify
