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

#include "ntts/bench.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <sys/utsname.h>

namespace ntts::bench {
namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double Time(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double Ratio(const std::vector<double>& slow, const std::vector<double>& fast) {
  if (slow.empty() || fast.empty()) return 0.0;
  return Median(slow) / Median(fast);
}

std::string CpuModel() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) return line.substr(colon + 2);
    }
  }
  return "unknown cpu";
}

nlohmann::json CountersToJson(const tensor::OpCounters& c) {
  return {{"matvec_count", c.matvec_count},
          {"matvec_macs", c.matvec_macs},
          {"head_evals", c.head_evals}};
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("Median of no values");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

signal::MelSpectrogram TileMel(const signal::MelSpectrogram& mel,
                               std::size_t min_frames) {
  if (mel.n_frames() == 0) throw std::invalid_argument("TileMel: empty mel");
  signal::MelSpectrogram out;
  out.n_mels = mel.n_mels;
  while (out.n_frames() < min_frames) {
    out.values.insert(out.values.end(), mel.values.begin(), mel.values.end());
  }
  return out;
}

double VocoderTimings::splitstate_speedup() const {
  return Ratio(baseline_seconds, split_seconds);
}

double VocoderTimings::cond_cache_speedup() const {
  return Ratio(split_nocache_seconds, split_seconds);
}

VocoderTimings CompareVocoders(const signal::MelSpectrogram& mel,
                               const vocoder::VocoderWeights& split,
                               const vocoder::BaselineWeights* baseline,
                               const vocoder::VocoderConfig& cfg,
                               const signal::SignalConfig& sig,
                               std::uint64_t seed,
                               const CompareOptions& options) {
  if (options.runs < 1) throw std::invalid_argument("runs must be >= 1");
  VocoderTimings t;
  t.audio_seconds = static_cast<double>(mel.n_frames()) *
                    cfg.samples_per_frame / sig.sample_rate;
  vocoder::SynthOptions cached;
  vocoder::SynthOptions uncached;
  uncached.cache_conditioning = false;
  for (int run = 0; run < options.runs; ++run) {
    t.split_seconds.push_back(
        Time([&] { vocoder::Synth(mel, split, cfg, sig, seed, cached); }));
    if (options.nocache) {
      t.split_nocache_seconds.push_back(
          Time([&] { vocoder::Synth(mel, split, cfg, sig, seed, uncached); }));
    }
    if (options.baseline && baseline != nullptr) {
      t.baseline_seconds.push_back(Time(
          [&] { vocoder::PerSampleBaseline(mel, *baseline, cfg, sig, seed); }));
    }
  }
  return t;
}

std::string MachineNote() {
  std::string note = CpuModel();
  utsname u{};
  if (uname(&u) == 0) {
    note += std::string(", ") + u.sysname + " " + u.release + " " + u.machine;
  }
  note += ", " + std::to_string(std::thread::hardware_concurrency()) +
          " hardware threads, " +
          std::to_string(vocoder::AvailableWorkers()) + " workers";
  return note;
}

nlohmann::json ReportToJson(const Report& r) {
  nlohmann::json j;
  j["machine"] = MachineNote();
  j["config_hash"] = r.config_hash;
  j["input"] = r.input;
  j["mel_frames"] = r.mel_frames;
  j["metrics"] = {
      {"cpl_ms", r.metrics.cpl_ms},
      {"rtf_e2e", r.metrics.rtf_e2e},
      {"rtf_frontend", r.metrics.rtf_frontend},
      {"rtf_vocoder", r.metrics.rtf_vocoder},
      {"audio_duration", r.metrics.audio_duration},
      {"wall_time", r.metrics.wall_time},
      {"peak_queue_depth", r.metrics.peak_queue_depth},
  };
  j["counters"] = {
      {"recurrent", CountersToJson(r.counters.recurrent)},
      {"conditioning", CountersToJson(r.counters.conditioning)},
      {"input", CountersToJson(r.counters.input)},
      {"head", CountersToJson(r.counters.head)},
  };
  if (r.comparison) {
    const VocoderTimings& t = *r.comparison;
    nlohmann::json c;
    c["runs"] = t.split_seconds.size();
    c["audio_seconds_per_run"] = t.audio_seconds;
    c["splitstate_seconds"] = t.split_seconds;
    c["splitstate_nocache_seconds"] = t.split_nocache_seconds;
    c["baseline_seconds"] = t.baseline_seconds;
    c["splitstate_speedup"] = t.splitstate_speedup();
    c["cond_cache_speedup"] = t.cond_cache_speedup();
    j["comparison"] = c;
    j["splitstate_speedup"] = t.splitstate_speedup();
    j["cond_cache_speedup"] = t.cond_cache_speedup();
  }
  return j;
}

}  // namespace ntts::bench
