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

#include "ntts/model.h"

#include <cmath>
#include <initializer_list>
#include <string>

#include "ntts/rng.h"

namespace ntts::io {
namespace {

using tensor::Layout;

// Draws one tensor into `out` under `name`.
class Generator {
 public:
  Generator(std::uint64_t seed, WeightContainer& out)
      : seed_(seed), out_(out) {}

  void Add(const std::string& name, std::initializer_list<std::size_t> dims,
           double fan_in) {
    Tensor t;
    std::size_t n = 1;
    for (std::size_t d : dims) {
      t.dims.push_back(static_cast<std::uint32_t>(d));
      n *= d;
    }
    const float scale = static_cast<float>(1.0 / std::sqrt(fan_in));
    rng::SplitMix64 gen(rng::Derive(seed_, rng::Fnv1a(name), 0));
    t.values.resize(n);
    for (float& v : t.values) v = gen.Symmetric(scale);
    out_.Add(name, std::move(t));
  }

  void Lstm(const std::string& prefix, std::size_t in, std::size_t units) {
    Add(prefix + ".W", {4 * units, in}, in);
    Add(prefix + ".U", {4 * units, units}, units);
    Add(prefix + ".b", {4 * units}, units);
  }

  void Head(const std::string& prefix, std::size_t in, std::size_t hidden,
            std::size_t classes) {
    Add(prefix + ".0.W", {hidden, in}, in);
    Add(prefix + ".0.b", {hidden}, in);
    Add(prefix + ".1.W", {classes, hidden}, hidden);
    Add(prefix + ".1.b", {classes}, hidden);
  }

 private:
  std::uint64_t seed_;
  WeightContainer& out_;
};

frontend::LstmWeights GetLstm(const WeightContainer& c,
                              const std::string& prefix, std::size_t in,
                              std::size_t units) {
  frontend::LstmWeights l;
  l.input = c.GetMatrix(prefix + ".W", 4 * units, in);
  l.recurrent = c.GetMatrix(prefix + ".U", 4 * units, units);
  l.bias = c.GetVector(prefix + ".b", 4 * units);
  return l;
}

vocoder::Head GetHead(const WeightContainer& c, const std::string& prefix,
                      std::size_t in, std::size_t hidden, std::size_t classes) {
  vocoder::Head h;
  h.fc1 = c.GetMatrix(prefix + ".0.W", hidden, in);
  h.fc1_bias = c.GetVector(prefix + ".0.b", hidden);
  h.fc2 = c.GetMatrix(prefix + ".1.W", classes, hidden);
  h.fc2_bias = c.GetVector(prefix + ".1.b", classes);
  return h;
}

}  // namespace

void AddFrontendWeights(std::uint64_t seed, const frontend::FrontendConfig& cfg,
                        WeightContainer& out) {
  cfg.Validate();
  Generator g(seed, out);
  const std::size_t mem = cfg.memory_dim();
  const std::size_t attn = cfg.attention_dim;
  g.Add("frontend.embedding", {std::size_t(cfg.vocab_size),
                               std::size_t(cfg.embed_dim)}, 1.0);
  g.Lstm("frontend.encoder.fw", cfg.embed_dim, cfg.encoder_units);
  g.Lstm("frontend.encoder.bw", cfg.embed_dim, cfg.encoder_units);
  g.Add("frontend.attention.query", {attn, std::size_t(cfg.decoder_units)},
        cfg.decoder_units);
  g.Add("frontend.attention.memory", {attn, mem}, mem);
  g.Add("frontend.attention.location",
        {attn, std::size_t(cfg.location_kernels)}, cfg.location_kernels);
  g.Add("frontend.attention.kernels",
        {std::size_t(cfg.location_kernels), 2,
         std::size_t(cfg.location_kernel_width)},
        2.0 * cfg.location_kernel_width);
  g.Add("frontend.attention.score", {attn}, attn);
  g.Add("frontend.attention.score_bias", {attn}, attn);
  g.Add("frontend.prenet.0.W", {std::size_t(cfg.prenet_dim0),
                                std::size_t(cfg.n_mels)}, cfg.n_mels);
  g.Add("frontend.prenet.0.b", {std::size_t(cfg.prenet_dim0)}, cfg.n_mels);
  g.Add("frontend.prenet.1.W", {std::size_t(cfg.prenet_dim1),
                                std::size_t(cfg.prenet_dim0)}, cfg.prenet_dim0);
  g.Add("frontend.prenet.1.b", {std::size_t(cfg.prenet_dim1)}, cfg.prenet_dim0);
  g.Lstm("frontend.decoder", cfg.prenet_dim1 + mem, cfg.decoder_units);
  const std::size_t proj_in = cfg.decoder_units + mem;
  g.Add("frontend.proj.W", {cfg.frame_values(), proj_in}, proj_in);
  g.Add("frontend.proj.b", {cfg.frame_values()}, proj_in);
}

void AddVocoderWeights(std::uint64_t seed, const vocoder::VocoderConfig& cfg,
                       WeightContainer& out) {
  cfg.Validate();
  Generator g(seed, out);
  const std::size_t hidden = cfg.hidden;
  const std::size_t half = cfg.half();
  const std::size_t embed = cfg.embed_dim;
  g.Add("vocoder.embed", {std::size_t(cfg.classes), embed}, 1.0);
  g.Add("vocoder.W_xA", {3 * half, embed}, embed);
  g.Add("vocoder.W_xB", {3 * half, embed}, embed);
  g.Add("vocoder.R", {3 * hidden, hidden}, hidden);
  g.Add("vocoder.gate_bias", {3 * hidden}, hidden);
  g.Add("vocoder.C", {3 * hidden, std::size_t(cfg.n_mels)}, cfg.n_mels);
  g.Add("vocoder.C_bias", {3 * hidden}, cfg.n_mels);
  g.Head("vocoder.head_A", half, cfg.head_hidden, cfg.classes);
  g.Head("vocoder.head_B", half, cfg.head_hidden, cfg.classes);
}

void AddBaselineWeights(std::uint64_t seed, const vocoder::VocoderConfig& cfg,
                        WeightContainer& out) {
  cfg.Validate();
  Generator g(seed, out);
  const std::size_t hidden = cfg.hidden;
  const std::size_t embed = cfg.embed_dim;
  g.Add("baseline.embed", {std::size_t(cfg.classes), embed}, 1.0);
  g.Add("baseline.W_x", {3 * hidden, embed}, embed);
  g.Add("baseline.R", {3 * hidden, hidden}, hidden);
  g.Add("baseline.gate_bias", {3 * hidden}, hidden);
  g.Add("baseline.C", {3 * hidden, std::size_t(cfg.n_mels)}, cfg.n_mels);
  g.Add("baseline.C_bias", {3 * hidden}, cfg.n_mels);
  g.Head("baseline.head", hidden, cfg.head_hidden, cfg.classes);
}

WeightContainer GenerateWeights(std::uint64_t seed, const RunConfig& cfg) {
  cfg.Validate();
  WeightContainer c;
  AddFrontendWeights(seed, cfg.frontend, c);
  AddVocoderWeights(seed, cfg.vocoder, c);
  AddBaselineWeights(seed, cfg.vocoder, c);
  return c;
}

frontend::FrontendWeights LoadFrontendWeights(
    const WeightContainer& c, const frontend::FrontendConfig& cfg) {
  cfg.Validate();
  const std::size_t mem = cfg.memory_dim();
  const std::size_t attn = cfg.attention_dim;
  const std::size_t kernels = cfg.location_kernels;
  const std::size_t width = cfg.location_kernel_width;
  frontend::FrontendWeights w;
  w.embedding = c.GetMatrix("frontend.embedding", cfg.vocab_size,
                            cfg.embed_dim, Layout::kRowMajor);
  w.encoder_fw = GetLstm(c, "frontend.encoder.fw", cfg.embed_dim,
                         cfg.encoder_units);
  w.encoder_bw = GetLstm(c, "frontend.encoder.bw", cfg.embed_dim,
                         cfg.encoder_units);
  w.attention.query_proj =
      c.GetMatrix("frontend.attention.query", attn, cfg.decoder_units);
  w.attention.memory_proj = c.GetMatrix("frontend.attention.memory", attn, mem);
  w.attention.location_proj =
      c.GetMatrix("frontend.attention.location", attn, kernels);
  const std::uint32_t kdims[] = {static_cast<std::uint32_t>(kernels), 2,
                                 static_cast<std::uint32_t>(width)};
  w.attention.location_kernels =
      c.Get("frontend.attention.kernels", kdims).values;
  w.attention.n_kernels = kernels;
  w.attention.kernel_width = width;
  w.attention.score_vector = c.GetVector("frontend.attention.score", attn);
  w.attention.score_bias = c.GetVector("frontend.attention.score_bias", attn);
  w.prenet0 = c.GetMatrix("frontend.prenet.0.W", cfg.prenet_dim0, cfg.n_mels);
  w.prenet0_bias = c.GetVector("frontend.prenet.0.b", cfg.prenet_dim0);
  w.prenet1 =
      c.GetMatrix("frontend.prenet.1.W", cfg.prenet_dim1, cfg.prenet_dim0);
  w.prenet1_bias = c.GetVector("frontend.prenet.1.b", cfg.prenet_dim1);
  w.decoder = GetLstm(c, "frontend.decoder", cfg.prenet_dim1 + mem,
                      cfg.decoder_units);
  w.projection = c.GetMatrix("frontend.proj.W", cfg.frame_values(),
                             cfg.decoder_units + mem);
  w.projection_bias = c.GetVector("frontend.proj.b", cfg.frame_values());
  w.Validate(cfg);
  return w;
}

vocoder::VocoderWeights LoadVocoderWeights(const WeightContainer& c,
                                           const vocoder::VocoderConfig& cfg) {
  cfg.Validate();
  const std::size_t hidden = cfg.hidden;
  const std::size_t half = cfg.half();
  vocoder::VocoderWeights w;
  w.embedding = c.GetMatrix("vocoder.embed", cfg.classes, cfg.embed_dim,
                            Layout::kRowMajor);
  w.input_a = c.GetMatrix("vocoder.W_xA", 3 * half, cfg.embed_dim);
  w.input_b = c.GetMatrix("vocoder.W_xB", 3 * half, cfg.embed_dim);
  w.recurrent = c.GetMatrix("vocoder.R", 3 * hidden, hidden);
  w.gate_bias = c.GetVector("vocoder.gate_bias", 3 * hidden);
  w.conditioning = c.GetMatrix("vocoder.C", 3 * hidden, cfg.n_mels);
  w.conditioning_bias = c.GetVector("vocoder.C_bias", 3 * hidden);
  w.head_a = GetHead(c, "vocoder.head_A", half, cfg.head_hidden, cfg.classes);
  w.head_b = GetHead(c, "vocoder.head_B", half, cfg.head_hidden, cfg.classes);
  w.Validate(cfg);
  return w;
}

vocoder::BaselineWeights LoadBaselineWeights(
    const WeightContainer& c, const vocoder::VocoderConfig& cfg) {
  cfg.Validate();
  const std::size_t hidden = cfg.hidden;
  vocoder::BaselineWeights w;
  w.embedding = c.GetMatrix("baseline.embed", cfg.classes, cfg.embed_dim,
                            Layout::kRowMajor);
  w.input = c.GetMatrix("baseline.W_x", 3 * hidden, cfg.embed_dim);
  w.recurrent = c.GetMatrix("baseline.R", 3 * hidden, hidden);
  w.gate_bias = c.GetVector("baseline.gate_bias", 3 * hidden);
  w.conditioning = c.GetMatrix("baseline.C", 3 * hidden, cfg.n_mels);
  w.conditioning_bias = c.GetVector("baseline.C_bias", 3 * hidden);
  w.head = GetHead(c, "baseline.head", hidden, cfg.head_hidden, cfg.classes);
  w.Validate(cfg);
  return w;
}

}  // namespace ntts::io
