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

#ifndef NTTS_CONFIG_H_
#define NTTS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "ntts/frontend.h"
#include "ntts/signal.h"
#include "ntts/streaming.h"
#include "ntts/vocoder.h"

namespace ntts::io {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every module configuration plus the run seed.
struct RunConfig {
  signal::SignalConfig signal;
  signal::FeatureConfig features;
  frontend::FrontendConfig frontend;
  vocoder::VocoderConfig vocoder;
  streaming::StreamConfig stream;
  std::uint64_t seed = 0;

  // Per-module checks plus the cross-module ones (hop = samples per vocoder
  // frame = sample_rate / 100, consistent mel sizes). Throws ConfigError.
  void Validate() const;
};

// One flat object per module: {"signal": {...}, "features": {...},
// "frontend": {...}, "vocoder": {...}, "stream": {...}, "seed": N}. Missing
// keys keep their defaults; unknown keys are errors.
RunConfig ConfigFromJson(const nlohmann::json& j);
nlohmann::json ConfigToJson(const RunConfig& cfg);
RunConfig LoadConfig(const std::filesystem::path& path);

// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string ConfigHash(const RunConfig& cfg);

}  // namespace ntts::io

#endif  // NTTS_CONFIG_H_
