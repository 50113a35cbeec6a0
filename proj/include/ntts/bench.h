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

// Throughput measurements and the JSON bench report.

#ifndef NTTS_BENCH_H_
#define NTTS_BENCH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ntts/config.h"
#include "ntts/signal.h"
#include "ntts/streaming.h"
#include "ntts/vocoder.h"

namespace ntts::bench {

double Median(std::vector<double> values);

// Repeats the frames of `mel` cyclically until it holds at least
// `min_frames` frames.
signal::MelSpectrogram TileMel(const signal::MelSpectrogram& mel,
                               std::size_t min_frames);

struct VocoderTimings {
  std::vector<double> split_seconds;
  std::vector<double> split_nocache_seconds;
  std::vector<double> baseline_seconds;
  double audio_seconds = 0.0;

  // Throughput ratios from the medians; 0 when a series is empty.
  double splitstate_speedup() const;
  double cond_cache_speedup() const;
};

struct CompareOptions {
  int runs = 5;
  bool baseline = true;
  bool nocache = true;
};

// Interleaves one run of each selected path per round so slow drift of the
// machine affects every path alike.
VocoderTimings CompareVocoders(const signal::MelSpectrogram& mel,
                               const vocoder::VocoderWeights& split,
                               const vocoder::BaselineWeights* baseline,
                               const vocoder::VocoderConfig& cfg,
                               const signal::SignalConfig& sig,
                               std::uint64_t seed,
                               const CompareOptions& options);

std::string MachineNote();

struct Report {
  std::string config_hash;
  std::string input;
  streaming::PipelineMetrics metrics;
  vocoder::VocoderCounters counters;
  std::uint64_t mel_frames = 0;
  std::optional<VocoderTimings> comparison;
};

nlohmann::json ReportToJson(const Report& report);

}  // namespace ntts::bench

#endif  // NTTS_BENCH_H_
