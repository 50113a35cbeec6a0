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

// Shared fixtures for the verification checks.

#ifndef NTTS_VERIFY_SUPPORT_H_
#define NTTS_VERIFY_SUPPORT_H_

#include <cstdint>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ntts/config.h"
#include "ntts/frontend.h"
#include "ntts/model.h"
#include "ntts/verify.h"
#include "ntts/vocoder.h"

namespace ntts::verify {

std::vector<Check> CoreChecks();
std::vector<Check> ModelChecks();
std::vector<Check> PipelineChecks();

// Records the first failed expectation.
class Tally {
 public:
  bool Expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failure_.empty()) failure_ = what;
    return ok;
  }
  bool ok() const { return failure_.empty(); }
  Outcome Done(const std::string& detail) const {
    if (ok()) return {true, detail};
    return {false, failure_};
  }

 private:
  std::string failure_;
  long total_ = 0;
};

template <typename... Args>
std::string Str(const Args&... args) {
  std::ostringstream os;
  os.precision(9);
  (os << ... << args);
  return os.str();
}

inline bool BitEqual(const std::vector<float>& a, const std::vector<float>& b) {
  return a.size() == b.size() &&
         (a.empty() || std::memcmp(a.data(), b.data(), a.size() * 4) == 0);
}

// Complete model set at a small random size, n_mels 80 and 240 samples per
// frame so every pipeline contract keeps its default shape.
struct Fixture {
  io::RunConfig cfg;
  frontend::FrontendWeights frontend;
  vocoder::VocoderWeights vocoder;
  vocoder::BaselineWeights baseline;
};

io::RunConfig RandomSmallConfig(std::mt19937_64& rng);
Fixture MakeFixture(const io::RunConfig& cfg, std::uint64_t seed);
frontend::PhonemeSequence RandomTokens(std::mt19937_64& rng, int vocab,
                                       int min_len, int max_len);

// Default-size models, generated once per process.
const Fixture& DefaultFixture();

// A speech-like test signal: a few harmonics under a slow envelope.
signal::AudioBuffer SyntheticSpeech(double seconds, std::uint64_t seed);

}  // namespace ntts::verify

#endif  // NTTS_VERIFY_SUPPORT_H_
