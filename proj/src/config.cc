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

#include "ntts/config.h"

#include <cstdio>
#include <fstream>
#include <set>

#include "ntts/rng.h"

namespace ntts::io {
namespace {

using nlohmann::json;

// Each config is described once by a visitor over (key, field) pairs; the
// same description drives parsing and dumping.
template <typename V>
void Visit(signal::SignalConfig& c, V& v) {
  v("sample_rate", c.sample_rate);
  v("preemphasis", c.preemphasis);
  v("mu", c.mu);
  v("quantization_levels", c.quantization_levels);
}

template <typename V>
void Visit(signal::FeatureConfig& c, V& v) {
  v("frame_length", c.frame_length);
  v("hop", c.hop);
  v("fft_size", c.fft_size);
  v("n_mels", c.n_mels);
  v("fmin", c.fmin);
  v("fmax", c.fmax);
}

template <typename V>
void Visit(frontend::FrontendConfig& c, V& v) {
  v("vocab_size", c.vocab_size);
  v("embed_dim", c.embed_dim);
  v("encoder_units", c.encoder_units);
  v("decoder_units", c.decoder_units);
  v("prenet_dim0", c.prenet_dim0);
  v("prenet_dim1", c.prenet_dim1);
  v("frames_per_step", c.frames_per_step);
  v("n_mels", c.n_mels);
  v("max_steps", c.max_steps);
  v("stop_threshold", c.stop_threshold);
  v("stop_patience", c.stop_patience);
  v("attention_dim", c.attention_dim);
  v("location_kernels", c.location_kernels);
  v("location_kernel_width", c.location_kernel_width);
  v("prenet_dropout", c.prenet_dropout);
  v("prenet_dropout_rate", c.prenet_dropout_rate);
  v("dropout_seed", c.dropout_seed);
}

template <typename V>
void Visit(vocoder::VocoderConfig& c, V& v) {
  v("hidden", c.hidden);
  v("embed_dim", c.embed_dim);
  v("classes", c.classes);
  v("samples_per_frame", c.samples_per_frame);
  v("pairs_per_frame", c.pairs_per_frame);
  v("head_hidden", c.head_hidden);
  v("n_mels", c.n_mels);
}

template <typename V>
void Visit(streaming::StreamConfig& c, V& v) {
  v("inner_steps", c.inner_steps);
  v("frames_per_chunk", c.frames_per_chunk);
  v("samples_per_chunk", c.samples_per_chunk);
  v("queue_capacity", c.queue_capacity);
  v("prioritize_vocoder", c.prioritize_vocoder);
}

class Parser {
 public:
  Parser(const json& section, std::string name)
      : section_(section), name_(std::move(name)) {
    if (!section_.is_object()) {
      throw ConfigError("config section '" + name_ + "' must be an object");
    }
  }

  template <typename T>
  void operator()(const char* key, T& field) {
    seen_.insert(key);
    auto it = section_.find(key);
    if (it == section_.end()) return;
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) throw ConfigError("expected a boolean");
      } else if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer()) throw ConfigError("expected an integer");
      } else {
        if (!it->is_number()) throw ConfigError("expected a number");
      }
      field = it->template get<T>();
    } catch (const std::exception& e) {
      throw ConfigError(name_ + "." + key + ": " + e.what());
    }
  }

  void Finish() const {
    for (const auto& [key, value] : section_.items()) {
      if (!seen_.count(key)) {
        throw ConfigError("unknown config key: " + name_ + "." + key);
      }
    }
  }

 private:
  const json& section_;
  std::string name_;
  std::set<std::string> seen_;
};

class Dumper {
 public:
  template <typename T>
  void operator()(const char* key, T& field) {
    out[key] = field;
  }
  json out = json::object();
};

template <typename C>
void ParseSection(const json& root, const char* name, C& cfg) {
  auto it = root.find(name);
  if (it == root.end()) return;
  Parser p(*it, name);
  Visit(cfg, p);
  p.Finish();
}

template <typename C>
json DumpSection(C cfg) {
  Dumper d;
  Visit(cfg, d);
  return d.out;
}

// Module validators throw std::invalid_argument; surface them as ConfigError.
template <typename F>
void Check(F&& f) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

void RunConfig::Validate() const {
  Check([&] { signal.Validate(); });
  Check([&] { features.Validate(signal.sample_rate); });
  Check([&] { frontend.Validate(); });
  Check([&] { vocoder.Validate(); });
  Check([&] {
    stream.Validate(frontend.frames_per_step, vocoder.samples_per_frame);
  });
  if (features.hop != vocoder.samples_per_frame ||
      features.hop * 100 != signal.sample_rate) {
    throw ConfigError(
        "features.hop, vocoder.samples_per_frame and sample_rate / 100 must "
        "agree");
  }
  if (features.n_mels != frontend.n_mels || features.n_mels != vocoder.n_mels) {
    throw ConfigError("n_mels differs between features, frontend and vocoder");
  }
}

RunConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> kSections = {
      "signal", "features", "frontend", "vocoder", "stream", "seed"};
  for (const auto& [key, value] : j.items()) {
    if (!kSections.count(key)) {
      throw ConfigError("unknown config section: " + key);
    }
  }
  RunConfig cfg;
  ParseSection(j, "signal", cfg.signal);
  ParseSection(j, "features", cfg.features);
  ParseSection(j, "frontend", cfg.frontend);
  ParseSection(j, "vocoder", cfg.vocoder);
  ParseSection(j, "stream", cfg.stream);
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) {
      throw ConfigError("seed must be a non-negative integer");
    }
    cfg.seed = it->get<std::uint64_t>();
  }
  cfg.Validate();
  return cfg;
}

json ConfigToJson(const RunConfig& cfg) {
  json j;
  j["signal"] = DumpSection(cfg.signal);
  j["features"] = DumpSection(cfg.features);
  j["frontend"] = DumpSection(cfg.frontend);
  j["vocoder"] = DumpSection(cfg.vocoder);
  j["stream"] = DumpSection(cfg.stream);
  j["seed"] = cfg.seed;
  return j;
}

RunConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return ConfigFromJson(j);
}

std::string ConfigHash(const RunConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    rng::Fnv1a(ConfigToJson(cfg).dump())));
  return buf;
}

}  // namespace ntts::io
