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
#include <exception>
#include <numbers>
#include <ostream>

#include "support.h"

namespace ntts::verify {

const std::vector<Check>& Registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> all;
    for (auto part : {CoreChecks(), ModelChecks(), PipelineChecks()}) {
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }();
  return checks;
}

std::vector<std::string> Criteria() {
  std::vector<std::string> out;
  for (int i = 1; i <= 13; ++i) out.push_back("AC" + std::to_string(i));
  return out;
}

Result RunOne(const Check& check) {
  Result r;
  r.check = &check;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.outcome = check.run();
  } catch (const std::exception& e) {
    r.outcome = {false, std::string("exception: ") + e.what()};
  } catch (...) {
    r.outcome = {false, "unknown exception"};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

std::vector<Result> Run(const RunOptions& options, std::ostream* progress) {
  std::vector<Result> results;
  for (const Check& check : Registry()) {
    if (!options.filter.empty() &&
        check.name.find(options.filter) == std::string::npos &&
        check.criterion != options.filter) {
      continue;
    }
    if (options.skip_timing && check.timing) continue;
    if (options.criteria_only && check.criterion.empty()) continue;
    Result r = RunOne(check);
    if (progress != nullptr) {
      *progress << (r.outcome.passed ? "PASS " : "FAIL ") << check.name;
      if (!check.criterion.empty()) *progress << " [" << check.criterion << "]";
      *progress << " (" << std::round(r.seconds * 100.0) / 100.0 << " s): "
                << r.outcome.detail << "\n";
      progress->flush();
    }
    results.push_back(std::move(r));
  }
  return results;
}

io::RunConfig RandomSmallConfig(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  io::RunConfig cfg;
  auto& f = cfg.frontend;
  f.vocab_size = pick(8, 40);
  f.embed_dim = pick(4, 16);
  f.encoder_units = pick(4, 12);
  f.decoder_units = pick(6, 16);
  f.prenet_dim0 = pick(4, 16);
  f.prenet_dim1 = pick(4, 16);
  f.attention_dim = pick(4, 10);
  f.location_kernels = pick(2, 6);
  f.location_kernel_width = 2 * pick(1, 4) + 1;
  auto& v = cfg.vocoder;
  v.hidden = 2 * pick(4, 24);
  v.embed_dim = pick(2, 8);
  v.head_hidden = pick(4, 24);
  return cfg;
}

Fixture MakeFixture(const io::RunConfig& cfg, std::uint64_t seed) {
  io::WeightContainer c;
  io::AddFrontendWeights(seed, cfg.frontend, c);
  io::AddVocoderWeights(seed, cfg.vocoder, c);
  io::AddBaselineWeights(seed, cfg.vocoder, c);
  Fixture fx;
  fx.cfg = cfg;
  fx.frontend = io::LoadFrontendWeights(c, cfg.frontend);
  fx.vocoder = io::LoadVocoderWeights(c, cfg.vocoder);
  fx.baseline = io::LoadBaselineWeights(c, cfg.vocoder);
  return fx;
}

frontend::PhonemeSequence RandomTokens(std::mt19937_64& rng, int vocab,
                                       int min_len, int max_len) {
  const int n = std::uniform_int_distribution<int>(min_len, max_len)(rng);
  std::uniform_int_distribution<int> id(0, vocab - 1);
  frontend::PhonemeSequence seq(n);
  for (int& t : seq) t = id(rng);
  return seq;
}

const Fixture& DefaultFixture() {
  static const Fixture fx = MakeFixture(io::RunConfig{}, 20261015);
  return fx;
}

signal::AudioBuffer SyntheticSpeech(double seconds, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.01);
  signal::AudioBuffer out;
  out.sample_rate = 24000;
  const auto n = static_cast<std::size_t>(seconds * out.sample_rate);
  out.samples.resize(n);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / out.sample_rate;
    const double f0 = 120.0 + 30.0 * std::sin(2.0 * pi * 0.7 * t);
    const double env = 0.5 + 0.5 * std::sin(2.0 * pi * 3.0 * t);
    double s = 0.0;
    for (int k = 1; k <= 8; ++k) {
      s += std::sin(2.0 * pi * k * f0 * t) / k;
    }
    out.samples[i] = static_cast<float>(0.25 * env * s + noise(rng));
  }
  return out;
}

}  // namespace ntts::verify
