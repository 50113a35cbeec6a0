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

// Command-line entry point.
//
// Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ntts/audio_io.h"
#include "ntts/bench.h"
#include "ntts/config.h"
#include "ntts/model.h"
#include "ntts/streaming.h"
#include "ntts/verify.h"

namespace {

namespace fs = std::filesystem;
using namespace ntts;

constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;

  io::RunConfig Config() const {
    io::RunConfig cfg = config.empty() ? io::RunConfig{} : io::LoadConfig(config);
    if (config.empty()) cfg.Validate();
    if (seed) cfg.seed = *seed;
    return cfg;
  }
};

void AddCommon(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "run config (JSON)")
      ->check(CLI::ExistingFile);
  app->add_option("--seed", c.seed, "sampling seed (default: config seed)");
}

streaming::PipelineConfig ToPipeline(const io::RunConfig& cfg) {
  streaming::PipelineConfig pc;
  pc.signal = cfg.signal;
  pc.frontend = cfg.frontend;
  pc.vocoder = cfg.vocoder;
  pc.stream = cfg.stream;
  return pc;
}

signal::AudioBuffer ReadInputWav(const fs::path& path, const io::RunConfig& cfg) {
  auto audio = io::ReadWav(path);
  if (audio.sample_rate != cfg.signal.sample_rate) {
    throw std::runtime_error(path.string() + ": sample rate " +
                             std::to_string(audio.sample_rate) + ", expected " +
                             std::to_string(cfg.signal.sample_rate));
  }
  return audio;
}

void WriteOutputWav(const fs::path& path, const signal::AudioBuffer& audio) {
  const std::size_t clamped = io::WriteWav(path, audio);
  if (clamped > 0) {
    std::cerr << "warning: " << clamped << " samples clamped to [-1, 1]\n";
  }
}

streaming::PipelineResult RunPipeline(const streaming::PipelineInput& input,
                                      const streaming::Models& models,
                                      const streaming::PipelineConfig& pc,
                                      std::uint64_t seed, bool stream) {
  return stream ? streaming::RunStreaming(input, models, pc, seed)
                : streaming::RunSerial(input, models, pc, seed);
}

void PrintMetrics(const streaming::PipelineMetrics& m) {
  std::cerr << "cpl_ms=" << m.cpl_ms << " rtf_e2e=" << m.rtf_e2e
            << " audio_s=" << m.audio_duration << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ntts: on-device neural text-to-speech"};
  app.require_subcommand(1);

  // gen-weights
  Common gen_common;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-weights", "write a random weight file");
  AddCommon(gen, gen_common);
  gen->add_option("--out", gen_out, "output weight file")->required();

  // extract-mel
  Common mel_common;
  std::string mel_in, mel_out;
  auto* mel_cmd = app.add_subcommand("extract-mel", "log-mel features of a WAV");
  AddCommon(mel_cmd, mel_common);
  mel_cmd->add_option("input", mel_in, "input WAV")->required()->check(CLI::ExistingFile);
  mel_cmd->add_option("--out", mel_out, "output mel file")->required();

  // copysynth
  Common copy_common;
  std::string copy_in, copy_weights, copy_out;
  bool copy_stream = false, copy_up = false;
  auto* copy = app.add_subcommand("copysynth", "vocode the features of a WAV");
  AddCommon(copy, copy_common);
  copy->add_option("input", copy_in, "input WAV")->required()->check(CLI::ExistingFile);
  copy->add_option("--weights", copy_weights, "weight file")->required()->check(CLI::ExistingFile);
  copy->add_option("--out", copy_out, "output WAV")->required();
  copy->add_flag("--streaming", copy_stream, "use the streaming pipeline");
  copy->add_flag("--upsample-48k", copy_up, "write 48 kHz output");

  // synth
  Common synth_common;
  std::string synth_tokens, synth_weights, synth_out, synth_symbols;
  std::string synth_attention = "sma";
  bool synth_stream = false, synth_up = false;
  auto* synth = app.add_subcommand("synth", "synthesize a token sequence");
  AddCommon(synth, synth_common);
  synth->add_option("--tokens", synth_tokens, "token file")->required()->check(CLI::ExistingFile);
  synth->add_option("--symbols", synth_symbols, "JSON symbol table")->check(CLI::ExistingFile);
  synth->add_option("--weights", synth_weights, "weight file")->required()->check(CLI::ExistingFile);
  synth->add_option("--out", synth_out, "output WAV")->required();
  synth->add_flag("--streaming", synth_stream, "use the streaming pipeline");
  synth->add_flag("--upsample-48k", synth_up, "write 48 kHz output");
  synth->add_option("--attention", synth_attention, "ls, mono or sma")
      ->check(CLI::IsMember({"ls", "mono", "sma"}));

  // upsample
  std::string up_in, up_out;
  auto* up = app.add_subcommand("upsample", "2x bandwidth extension of a WAV");
  up->add_option("input", up_in, "input WAV")->required()->check(CLI::ExistingFile);
  up->add_option("--out", up_out, "output WAV")->required();

  // bench
  Common bench_common;
  std::string bench_weights, bench_input, bench_out;
  bool bench_compare = false;
  int bench_runs = 5;
  double bench_seconds = 5.0;
  auto* bench_cmd = app.add_subcommand("bench", "measure latency and throughput");
  AddCommon(bench_cmd, bench_common);
  bench_cmd->add_option("--weights", bench_weights, "weight file")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--input", bench_input, "token file or WAV")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--out", bench_out, "report JSON")->required();
  bench_cmd->add_flag("--compare-baselines", bench_compare,
                      "time the per-sample baseline and the uncached vocoder");
  bench_cmd->add_option("--runs", bench_runs, "timed runs per variant")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-seconds", bench_seconds,
                        "minimum audio per comparison run")->check(CLI::PositiveNumber);

  // verify
  std::string verify_filter;
  bool verify_list = false, verify_skip_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--filter", verify_filter,
                         "check name substring or criterion id");
  verify_cmd->add_flag("--list", verify_list, "list registered checks");
  verify_cmd->add_flag("--skip-timing", verify_skip_timing,
                       "skip wall-clock checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen) {
      const auto cfg = gen_common.Config();
      io::SaveWeights(gen_out, io::GenerateWeights(cfg.seed, cfg));
      return 0;
    }
    if (*mel_cmd) {
      const auto cfg = mel_common.Config();
      const auto audio = ReadInputWav(mel_in, cfg);
      io::WriteMel(mel_out, signal::ExtractMel(audio, cfg.features, cfg.signal));
      return 0;
    }
    if (*copy) {
      const auto cfg = copy_common.Config();
      const auto weights = io::LoadWeights(copy_weights);
      const auto voc = io::LoadVocoderWeights(weights, cfg.vocoder);
      const auto mel =
          signal::ExtractMel(ReadInputWav(copy_in, cfg), cfg.features, cfg.signal);
      auto result = RunPipeline(mel, {nullptr, &voc}, ToPipeline(cfg), cfg.seed,
                                copy_stream);
      PrintMetrics(result.metrics);
      WriteOutputWav(copy_out, copy_up ? signal::Upsample48k(result.audio)
                                       : result.audio);
      return 0;
    }
    if (*synth) {
      const auto cfg = synth_common.Config();
      std::optional<nlohmann::json> symbols;
      if (!synth_symbols.empty()) {
        std::ifstream in(synth_symbols);
        symbols = nlohmann::json::parse(in);
      }
      const auto tokens =
          io::ReadTokens(synth_tokens, symbols ? &*symbols : nullptr);
      const auto weights = io::LoadWeights(synth_weights);
      const auto fe = io::LoadFrontendWeights(weights, cfg.frontend);
      const auto voc = io::LoadVocoderWeights(weights, cfg.vocoder);
      auto pc = ToPipeline(cfg);
      pc.variant = *attention::ParseVariant(synth_attention);
      auto result = RunPipeline(tokens, {&fe, &voc}, pc, cfg.seed, synth_stream);
      PrintMetrics(result.metrics);
      WriteOutputWav(synth_out, synth_up ? signal::Upsample48k(result.audio)
                                         : result.audio);
      return 0;
    }
    if (*up) {
      WriteOutputWav(up_out, signal::Upsample48k(io::ReadWav(up_in)));
      return 0;
    }
    if (*bench_cmd) {
      const auto cfg = bench_common.Config();
      const auto weights = io::LoadWeights(bench_weights);
      const auto voc = io::LoadVocoderWeights(weights, cfg.vocoder);
      const auto pc = ToPipeline(cfg);
      bench::Report report;
      report.config_hash = io::ConfigHash(cfg);
      report.input = bench_input;
      streaming::PipelineResult result;
      std::optional<frontend::FrontendWeights> fe;
      if (fs::path(bench_input).extension() == ".wav") {
        const auto mel = signal::ExtractMel(ReadInputWav(bench_input, cfg),
                                            cfg.features, cfg.signal);
        result = streaming::RunStreaming(mel, {nullptr, &voc}, pc, cfg.seed);
      } else {
        fe = io::LoadFrontendWeights(weights, cfg.frontend);
        result = streaming::RunStreaming(io::ReadTokens(bench_input),
                                         {&*fe, &voc}, pc, cfg.seed);
      }
      report.metrics = result.metrics;
      report.counters = result.stats.counters;
      report.mel_frames = result.mel.n_frames();
      if (bench_compare) {
        if (result.mel.n_frames() == 0) throw std::runtime_error("empty input");
        const auto base = io::LoadBaselineWeights(weights, cfg.vocoder);
        bench::CompareOptions opts;
        opts.runs = bench_runs;
        const auto mel = bench::TileMel(
            result.mel, static_cast<std::size_t>(std::ceil(bench_seconds * 100.0)));
        report.comparison = bench::CompareVocoders(mel, voc, &base, cfg.vocoder,
                                                   cfg.signal, cfg.seed, opts);
      }
      const auto j = bench::ReportToJson(report);
      std::ofstream out(bench_out);
      if (!out) throw std::runtime_error("cannot write " + bench_out);
      out << j.dump(2) << "\n";
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      if (verify_list) {
        for (const auto& c : verify::Registry()) {
          std::cout << c.name << (c.criterion.empty() ? "" : " [" + c.criterion + "]")
                    << (c.timing ? " (timing)" : "") << ": " << c.summary << "\n";
        }
        return 0;
      }
      verify::RunOptions options;
      options.filter = verify_filter;
      options.skip_timing = verify_skip_timing;
      const auto results = verify::Run(options, &std::cout);
      if (results.empty()) throw UsageError("no check matches " + verify_filter);
      std::size_t failed = 0;
      for (const auto& r : results) failed += r.outcome.passed ? 0 : 1;
      std::cout << results.size() - failed << "/" << results.size()
                << " checks passed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const io::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
