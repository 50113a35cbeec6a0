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

// Tensor naming, random initialization and typed views of a weight
// container.
//
// Frontend tensors live under "frontend.", the split-state vocoder under
// "vocoder." (R is "vocoder.R", 3*hidden x hidden) and the per-sample
// comparison model under "baseline.".

#ifndef NTTS_MODEL_H_
#define NTTS_MODEL_H_

#include <cstdint>

#include "ntts/config.h"
#include "ntts/frontend.h"
#include "ntts/vocoder.h"
#include "ntts/weights.h"

namespace ntts::io {

// Every tensor drawn uniform in [-s, s], s = 1/sqrt(fan_in); embedding
// tables use s = 1. Each tensor has its own stream keyed by (seed, name), so
// values do not depend on generation order.
void AddFrontendWeights(std::uint64_t seed, const frontend::FrontendConfig& cfg,
                        WeightContainer& out);
void AddVocoderWeights(std::uint64_t seed, const vocoder::VocoderConfig& cfg,
                       WeightContainer& out);
void AddBaselineWeights(std::uint64_t seed, const vocoder::VocoderConfig& cfg,
                        WeightContainer& out);
WeightContainer GenerateWeights(std::uint64_t seed, const RunConfig& cfg);

// Throw MissingTensorError when a tensor is absent or misshapen.
frontend::FrontendWeights LoadFrontendWeights(
    const WeightContainer& c, const frontend::FrontendConfig& cfg);
vocoder::VocoderWeights LoadVocoderWeights(const WeightContainer& c,
                                           const vocoder::VocoderConfig& cfg);
vocoder::BaselineWeights LoadBaselineWeights(
    const WeightContainer& c, const vocoder::VocoderConfig& cfg);

}  // namespace ntts::io

#endif  // NTTS_MODEL_H_
