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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "ntts/audio_io.h"
#include "ntts/config.h"
#include "ntts/weights.h"

namespace ntts::io {
namespace {

using testing::SameBits;

std::vector<std::uint8_t> FromHex(const std::string& hex) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  }
  return out;
}

signal::AudioBuffer Buffer(std::vector<float> samples) {
  signal::AudioBuffer b;
  b.samples = std::move(samples);
  return b;
}

TEST_CASE("wav bytes match a reference encoder") {
  const auto enc = EncodeWav(Buffer({0.0f, 0.5f, -0.25f, 1.0f, -1.0f}));
  CHECK(enc.bytes ==
        FromHex("524946462e00000057415645666d74201000000001000100c05d0000"
                "80bb000002001000646174610a0000000000004000e0ff7f0180"));
  CHECK(enc.clamped == 0);
}

TEST_CASE("wav round trip and sizes") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> x(24000);
  for (float& s : x) s = u(rng);
  const auto enc = EncodeWav(Buffer(x));
  CHECK(enc.bytes.size() == 44 + 48000);
  const auto back = DecodeWav(enc.bytes);
  CHECK(back.sample_rate == 24000);
  REQUIRE(back.samples.size() == x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    REQUIRE(std::abs(back.samples[i] - x[i]) <= 1.0 / 32767);
  }
  CHECK(EncodeWav(back).bytes == enc.bytes);

  const auto empty = EncodeWav(Buffer({}));
  CHECK(empty.bytes.size() == 44);
  CHECK(DecodeWav(empty.bytes).samples.empty());

  const auto loud = EncodeWav(
      Buffer({2.0f, -3.0f, std::numeric_limits<float>::quiet_NaN(), 0.5f}));
  CHECK(loud.clamped == 3);
  const auto decoded = DecodeWav(loud.bytes).samples;
  CHECK(decoded[0] == 1.0f);
  CHECK(decoded[1] == -1.0f);
  CHECK(decoded[2] == 0.0f);
}

TEST_CASE("wav decoder rejects malformed input") {
  auto bytes = EncodeWav(Buffer({0.1f, 0.2f})).bytes;
  CHECK_THROWS_AS(DecodeWav(std::span<const std::uint8_t>(bytes).first(20)), WavError);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(DecodeWav(bad_magic), WavError);
  auto float_format = bytes;
  float_format[20] = 3;
  CHECK_THROWS_AS(DecodeWav(float_format), WavError);
  auto stereo = bytes;
  stereo[22] = 2;
  CHECK_THROWS_AS(DecodeWav(stereo), WavError);
}

TEST_CASE("weight container bytes match a reference encoder") {
  WeightContainer c;
  c.Add("w", Tensor{{1, 2}, {1.5f, -2.0f}});
  CHECK(c.Serialize() ==
        FromHex("4e54545357303101010000000100000077000200000001000000020000"
                "000000c03f000000c0"));
}

TEST_CASE("weight container round trip and errors") {
  WeightContainer c;
  c.Add("a.b", Tensor{{2, 3}, {1, 2, 3, 4, 5, 6}});
  c.Add("v", Tensor{{3}, {0.5f, -0.5f, 0.25f}});
  CHECK_THROWS_AS(c.Add("v", Tensor{{1}, {1}}), DuplicateTensorError);
  CHECK_THROWS_AS(c.Add("bad", Tensor{{2}, {1}}), std::invalid_argument);
  const auto bytes = c.Serialize();
  CHECK(WeightContainer::Deserialize(bytes) == c);
  for (std::size_t n = 0; n < bytes.size(); ++n) {
    CHECK_THROWS_AS(
        WeightContainer::Deserialize(std::span<const std::uint8_t>(bytes).first(n)),
        WeightFormatError);
  }
  CHECK_THROWS_AS(
      WeightContainer::Deserialize(std::span<const std::uint8_t>(bytes).first(20)),
      TruncatedFileError);
  auto magic = bytes;
  magic[0] = 'M';
  CHECK_THROWS_AS(WeightContainer::Deserialize(magic), BadMagicError);
  auto version = bytes;
  version[7] = 2;
  CHECK_THROWS_AS(WeightContainer::Deserialize(version), BadVersionError);

  const auto m = c.GetMatrix("a.b", 2, 3);
  CHECK(m.at(1, 0) == 4.0f);
  CHECK(c.GetMatrix("a.b", 2, 3, tensor::Layout::kRowMajor).data()[1] == 2.0f);
  CHECK_THROWS_AS(c.GetMatrix("a.b", 3, 2), MissingTensorError);
  CHECK_THROWS_AS(c.Get("nope"), MissingTensorError);

  const auto path = std::filesystem::temp_directory_path() / "ntts_unit_weights.nttsw";
  SaveWeights(path, c);
  CHECK(LoadWeights(path) == c);
  std::filesystem::remove(path);
}

TEST_CASE("generated weights") {
  const auto a = GenerateWeights(5, testing::TinyConfig());
  CHECK(a == GenerateWeights(5, testing::TinyConfig()));
  CHECK_FALSE(a == GenerateWeights(6, testing::TinyConfig()));
  CHECK(a.Serialize().size() == 40959);
  for (const auto& [name, t] : a.tensors()) {
    for (float v : t.values) REQUIRE((std::isfinite(v) && std::abs(v) <= 1.0f));
  }
  WeightContainer big;
  AddVocoderWeights(1, vocoder::VocoderConfig{}, big);
  const auto& r = big.Get("vocoder.R");
  CHECK(r.dims == std::vector<std::uint32_t>{1536, 512});
  CHECK(r.values.size() * sizeof(float) == 3145728);
}

TEST_CASE("mel file round trip") {
  signal::MelSpectrogram mel;
  mel.n_mels = 3;
  mel.values = {1, 2, 3, -4, -5, -6};
  const auto bytes = EncodeMel(mel);
  const auto back = DecodeMel(bytes);
  CHECK(back.n_mels == 3);
  CHECK(SameBits(back.values, mel.values));
  CHECK_THROWS_AS(DecodeMel(std::span<const std::uint8_t>(bytes).first(bytes.size() - 1)),
                  MelFormatError);
  auto bad = bytes;
  bad[0] = 'x';
  CHECK_THROWS_AS(DecodeMel(bad), MelFormatError);
}

TEST_CASE("token parsing") {
  CHECK(ParseTokens("1 2\n 30\t4") == frontend::PhonemeSequence{1, 2, 30, 4});
  CHECK_THROWS_AS(ParseTokens("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(ParseTokens("-3"), std::invalid_argument);
  CHECK_THROWS_AS(ParseTokens("  "), std::invalid_argument);
  const nlohmann::json symbols = {{"a", 1}, {"b", 2}, {"_", 0}};
  CHECK(ParseTokens("a _ b a", &symbols) == frontend::PhonemeSequence{1, 0, 2, 1});
  CHECK_THROWS_AS(ParseTokens("a c", &symbols), std::invalid_argument);
}

TEST_CASE("configuration documents") {
  const RunConfig defaults;
  CHECK_NOTHROW(defaults.Validate());
  const auto j = ConfigToJson(defaults);
  CHECK(ConfigToJson(ConfigFromJson(j)) == j);
  CHECK(ConfigHash(ConfigFromJson(j)) == ConfigHash(defaults));
  CHECK(ConfigHash(defaults).size() == 16);

  const auto tiny = ConfigFromJson(nlohmann::json::parse(
      R"({"vocoder": {"hidden": 4, "embed_dim": 2, "head_hidden": 3}, "seed": 9})"));
  CHECK(tiny.vocoder.hidden == 4);
  CHECK(tiny.vocoder.classes == 256);
  CHECK(tiny.seed == 9);
  CHECK(ConfigHash(tiny) != ConfigHash(defaults));

  CHECK_THROWS_AS(ConfigFromJson(nlohmann::json::parse(R"({"vocodr": {}})")),
                  ConfigError);
  CHECK_THROWS_AS(
      ConfigFromJson(nlohmann::json::parse(R"({"vocoder": {"hiden": 4}})")),
      ConfigError);
  CHECK_THROWS_AS(
      ConfigFromJson(nlohmann::json::parse(R"({"features": {"hop": 200}})")),
      ConfigError);
}

}  // namespace
}  // namespace ntts::io
