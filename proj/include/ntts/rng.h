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

// Portable deterministic random streams. std::*_distribution output is
// implementation-defined, so conversions to floats are done by hand here.

#ifndef NTTS_RNG_H_
#define NTTS_RNG_H_

#include <cstdint>
#include <string_view>

namespace ntts::rng {

inline std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Combines a seed with stream identifiers into an independent stream key.
inline std::uint64_t Derive(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b = 0) {
  return Mix64(Mix64(seed + 0x9e3779b97f4a7c15ULL * (a + 1)) ^
               (0xd1b54a32d192ed03ULL * (b + 1)));
}

inline std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return Mix64(state_);
  }
  // Uniform in the open interval (0, 1), 24-bit resolution.
  float UniformOpen() {
    return (static_cast<float>(Next() >> 40) + 0.5f) * 0x1.0p-24f;
  }
  // Uniform in [0, 1), 53-bit resolution.
  double UniformDouble() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }
  // Uniform in [-scale, scale].
  float Symmetric(float scale) {
    return scale * (2.0f * static_cast<float>(Next() >> 40) * 0x1.0p-24f - 1.0f);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ntts::rng

#endif  // NTTS_RNG_H_
