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

#include "ntts/audio_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ntts/bytes.h"
#include "ntts/weights.h"

namespace ntts::io {
namespace {

constexpr std::string_view kMelMagic = "NTTSM01";
constexpr float kPcmScale = 32767.0f;

}  // namespace

WavEncodeResult EncodeWav(const signal::AudioBuffer& audio) {
  WavEncodeResult result;
  const auto data_bytes =
      static_cast<std::uint32_t>(audio.samples.size() * sizeof(std::int16_t));
  bytes::Writer w;
  w.Str("RIFF");
  w.U32(36 + data_bytes);
  w.Str("WAVE");
  w.Str("fmt ");
  w.U32(16);
  w.U16(1);  // PCM
  w.U16(1);  // mono
  w.U32(static_cast<std::uint32_t>(audio.sample_rate));
  w.U32(static_cast<std::uint32_t>(audio.sample_rate) * 2);
  w.U16(2);
  w.U16(16);
  w.Str("data");
  w.U32(data_bytes);
  for (float s : audio.samples) {
    if (!(s >= -1.0f && s <= 1.0f)) {
      ++result.clamped;
      s = std::isnan(s) ? 0.0f : std::clamp(s, -1.0f, 1.0f);
    }
    const auto code = static_cast<std::int16_t>(std::lround(s * kPcmScale));
    w.U16(static_cast<std::uint16_t>(code));
  }
  result.bytes = w.Take();
  return result;
}

signal::AudioBuffer DecodeWav(std::span<const std::uint8_t> data) {
  bytes::Reader r(data);
  try {
    if (r.Str(4) != "RIFF") throw WavError("not a RIFF file");
    r.U32();
    if (r.Str(4) != "WAVE") throw WavError("not a WAVE file");
    bool have_fmt = false;
    signal::AudioBuffer out;
    while (true) {
      const std::string id = r.Str(4);
      const std::uint32_t size = r.U32();
      if (id == "fmt ") {
        if (size < 16) throw WavError("fmt chunk too short");
        const std::uint16_t format = r.U16();
        const std::uint16_t channels = r.U16();
        out.sample_rate = static_cast<int>(r.U32());
        r.U32();  // byte rate
        r.U16();  // block align
        const std::uint16_t bits = r.U16();
        if (format != 1) throw WavError("not PCM (format " +
                                        std::to_string(format) + ")");
        if (channels != 1) throw WavError("expected mono, got " +
                                          std::to_string(channels) +
                                          " channels");
        if (bits != 16) throw WavError("expected 16-bit samples");
        if (out.sample_rate <= 0) throw WavError("invalid sample rate");
        std::vector<std::uint8_t> skip(size - 16 + (size & 1));
        r.Raw(skip.data(), skip.size());
        have_fmt = true;
      } else if (id == "data") {
        if (!have_fmt) throw WavError("data chunk before fmt chunk");
        if (size % 2 != 0) throw WavError("odd data chunk size");
        if (size > r.remaining()) throw WavError("truncated data chunk");
        out.samples.resize(size / 2);
        for (float& s : out.samples) {
          s = static_cast<float>(static_cast<std::int16_t>(r.U16())) /
              kPcmScale;
        }
        return out;
      } else {
        if (size > r.remaining()) throw WavError("truncated chunk " + id);
        std::vector<std::uint8_t> skip(size + (size & 1));
        r.Raw(skip.data(), std::min<std::size_t>(skip.size(), r.remaining()));
      }
    }
  } catch (const bytes::TruncatedError&) {
    throw WavError("truncated WAV file");
  }
}

std::size_t WriteWav(const std::filesystem::path& path,
                     const signal::AudioBuffer& audio) {
  WavEncodeResult enc = EncodeWav(audio);
  WriteFileBytes(path, enc.bytes);
  return enc.clamped;
}

signal::AudioBuffer ReadWav(const std::filesystem::path& path) {
  return DecodeWav(ReadFileBytes(path));
}

std::vector<std::uint8_t> EncodeMel(const signal::MelSpectrogram& mel) {
  if (mel.n_mels == 0 || mel.values.size() % mel.n_mels != 0) {
    throw std::invalid_argument("EncodeMel: ragged spectrogram");
  }
  bytes::Writer w;
  w.Str(kMelMagic);
  w.U32(static_cast<std::uint32_t>(mel.n_frames()));
  w.U32(static_cast<std::uint32_t>(mel.n_mels));
  w.Floats(mel.values);
  return w.Take();
}

signal::MelSpectrogram DecodeMel(std::span<const std::uint8_t> data) {
  bytes::Reader r(data);
  try {
    if (r.remaining() < kMelMagic.size() ||
        r.Str(kMelMagic.size()) != kMelMagic) {
      throw MelFormatError("not a mel file (bad magic)");
    }
    const std::uint32_t frames = r.U32();
    const std::uint32_t bins = r.U32();
    if (bins == 0) throw MelFormatError("mel file with zero bins");
    const std::size_t n = static_cast<std::size_t>(frames) * bins;
    if (n != r.remaining() / sizeof(float) ||
        r.remaining() % sizeof(float) != 0) {
      throw MelFormatError("mel payload size does not match its header");
    }
    signal::MelSpectrogram mel;
    mel.n_mels = bins;
    mel.values.resize(n);
    r.Floats(mel.values);
    return mel;
  } catch (const bytes::TruncatedError&) {
    throw MelFormatError("truncated mel file");
  }
}

void WriteMel(const std::filesystem::path& path,
              const signal::MelSpectrogram& mel) {
  WriteFileBytes(path, EncodeMel(mel));
}

signal::MelSpectrogram ReadMel(const std::filesystem::path& path) {
  return DecodeMel(ReadFileBytes(path));
}

frontend::PhonemeSequence ParseTokens(std::string_view text,
                                      const nlohmann::json* symbols) {
  frontend::PhonemeSequence seq;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    if (symbols != nullptr) {
      auto it = symbols->find(word);
      if (it == symbols->end() || !it->is_number_integer()) {
        throw std::invalid_argument("unknown symbol: " + word);
      }
      seq.push_back(it->get<int>());
      continue;
    }
    int id = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), id);
    if (ec != std::errc() || end != word.data() + word.size() || id < 0) {
      throw std::invalid_argument("bad token id: " + word);
    }
    seq.push_back(id);
  }
  if (seq.empty()) throw std::invalid_argument("empty token sequence");
  return seq;
}

frontend::PhonemeSequence ReadTokens(const std::filesystem::path& path,
                                     const nlohmann::json* symbols) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseTokens(ss.str(), symbols);
}

}  // namespace ntts::io
