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

// WAV (16-bit PCM mono), mel ("NTTSM01") and token-list files.

#ifndef NTTS_AUDIO_IO_H_
#define NTTS_AUDIO_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ntts/frontend.h"
#include "ntts/signal.h"

namespace ntts::io {

class WavError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Samples are written as round(s * 32767) after clamping to [-1, 1] and read
// back as code / 32767, so write -> read -> write is byte-stable.
struct WavEncodeResult {
  std::vector<std::uint8_t> bytes;
  std::size_t clamped = 0;  // samples outside [-1, 1]
};
WavEncodeResult EncodeWav(const signal::AudioBuffer& audio);
// Throws WavError on a malformed header, non-PCM or multichannel data.
signal::AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes);

std::size_t WriteWav(const std::filesystem::path& path,
                     const signal::AudioBuffer& audio);
signal::AudioBuffer ReadWav(const std::filesystem::path& path);

std::vector<std::uint8_t> EncodeMel(const signal::MelSpectrogram& mel);
signal::MelSpectrogram DecodeMel(std::span<const std::uint8_t> bytes);
void WriteMel(const std::filesystem::path& path,
              const signal::MelSpectrogram& mel);
signal::MelSpectrogram ReadMel(const std::filesystem::path& path);

// Whitespace-separated token IDs, or symbols when `symbols` (a JSON object
// of symbol -> ID) is given. Throws std::invalid_argument on bad input.
frontend::PhonemeSequence ParseTokens(std::string_view text,
                                      const nlohmann::json* symbols = nullptr);
frontend::PhonemeSequence ReadTokens(const std::filesystem::path& path,
                                     const nlohmann::json* symbols = nullptr);

}  // namespace ntts::io

#endif  // NTTS_AUDIO_IO_H_
