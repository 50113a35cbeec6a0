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

// Small models shared by the unit tests.

#ifndef NTTS_TESTS_UNIT_FIXTURES_H_
#define NTTS_TESTS_UNIT_FIXTURES_H_

#include <cstdint>
#include <cstring>
#include <vector>

#include "ntts/config.h"
#include "ntts/frontend.h"
#include "ntts/model.h"
#include "ntts/vocoder.h"

namespace ntts::testing {

// The configuration used by the numpy reference values in tests/oracle.
inline io::RunConfig TinyConfig() {
  io::RunConfig cfg;
  auto& f = cfg.frontend;
  f.vocab_size = 8;
  f.embed_dim = 4;
  f.encoder_units = 4;
  f.decoder_units = 6;
  f.prenet_dim0 = 4;
  f.prenet_dim1 = 4;
  f.attention_dim = 4;
  f.location_kernels = 2;
  f.location_kernel_width = 3;
  auto& v = cfg.vocoder;
  v.hidden = 4;
  v.embed_dim = 2;
  v.head_hidden = 3;
  return cfg;
}

struct TinyModels {
  io::RunConfig cfg;
  io::WeightContainer container;
  frontend::FrontendWeights frontend;
  vocoder::VocoderWeights vocoder;
  vocoder::BaselineWeights baseline;
};

inline TinyModels MakeTinyModels(std::uint64_t seed,
                                 io::RunConfig cfg = TinyConfig()) {
  TinyModels m;
  m.cfg = cfg;
  m.container = io::GenerateWeights(seed, cfg);
  m.frontend = io::LoadFrontendWeights(m.container, cfg.frontend);
  m.vocoder = io::LoadVocoderWeights(m.container, cfg.vocoder);
  m.baseline = io::LoadBaselineWeights(m.container, cfg.vocoder);
  return m;
}

inline bool SameBits(const std::vector<float>& a, const std::vector<float>& b) {
  return a.size() == b.size() &&
         (a.empty() || std::memcmp(a.data(), b.data(), a.size() * 4) == 0);
}

}  // namespace ntts::testing

#endif  // NTTS_TESTS_UNIT_FIXTURES_H_
