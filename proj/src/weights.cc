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

#include "ntts/weights.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string_view>

#include "ntts/bytes.h"

namespace ntts::io {
namespace {

constexpr std::string_view kMagic = "NTTSW01";
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kDtypeF32 = 0;

std::string DimsString(std::span<const std::uint32_t> dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

}  // namespace

std::size_t Tensor::size() const {
  std::size_t n = 1;
  for (std::uint32_t d : dims) n *= d;
  return n;
}

void WeightContainer::Add(const std::string& name, Tensor tensor) {
  if (tensor.values.size() != tensor.size()) {
    throw std::invalid_argument("tensor " + name + ": payload has " +
                                std::to_string(tensor.values.size()) +
                                " values for dims " + DimsString(tensor.dims));
  }
  if (!tensors_.emplace(name, std::move(tensor)).second) {
    throw DuplicateTensorError("duplicate tensor name: " + name);
  }
}

bool WeightContainer::Contains(const std::string& name) const {
  return tensors_.count(name) > 0;
}

const Tensor& WeightContainer::Get(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) {
    throw MissingTensorError("missing tensor: " + name);
  }
  return it->second;
}

const Tensor& WeightContainer::Get(const std::string& name,
                                   std::span<const std::uint32_t> dims) const {
  const Tensor& t = Get(name);
  if (!std::equal(t.dims.begin(), t.dims.end(), dims.begin(), dims.end())) {
    throw MissingTensorError("tensor " + name + " has dims " +
                             DimsString(t.dims) + ", expected " +
                             DimsString(dims));
  }
  return t;
}

tensor::Matrix WeightContainer::GetMatrix(const std::string& name,
                                          std::size_t rows, std::size_t cols,
                                          tensor::Layout layout) const {
  const std::uint32_t dims[] = {static_cast<std::uint32_t>(rows),
                                static_cast<std::uint32_t>(cols)};
  return tensor::Matrix(rows, cols, Get(name, dims).values, layout);
}

std::vector<float> WeightContainer::GetVector(const std::string& name,
                                              std::size_t len) const {
  const std::uint32_t dims[] = {static_cast<std::uint32_t>(len)};
  return Get(name, dims).values;
}

std::vector<std::uint8_t> WeightContainer::Serialize() const {
  bytes::Writer w;
  w.Str(kMagic);
  w.U8(kVersion);
  w.U32(static_cast<std::uint32_t>(tensors_.size()));
  for (const auto& [name, t] : tensors_) {
    w.U32(static_cast<std::uint32_t>(name.size()));
    w.Str(name);
    w.U8(kDtypeF32);
    w.U32(static_cast<std::uint32_t>(t.dims.size()));
    for (std::uint32_t d : t.dims) w.U32(d);
    w.Floats(t.values);
  }
  return w.Take();
}

WeightContainer WeightContainer::Deserialize(
    std::span<const std::uint8_t> data) {
  bytes::Reader r(data);
  WeightContainer c;
  try {
    if (r.remaining() < kMagic.size() || r.Str(kMagic.size()) != kMagic) {
      throw BadMagicError("not a weight file (bad magic)");
    }
    const std::uint8_t version = r.U8();
    if (version != kVersion) {
      throw BadVersionError("unsupported weight file version " +
                            std::to_string(version));
    }
    const std::uint32_t count = r.U32();
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t name_len = r.U32();
      if (name_len > r.remaining()) {
        throw TruncatedFileError("truncated weight file: tensor name");
      }
      std::string name = r.Str(name_len);
      const std::uint8_t dtype = r.U8();
      if (dtype != kDtypeF32) {
        throw WeightFormatError("tensor " + name + ": unsupported dtype " +
                                std::to_string(dtype));
      }
      const std::uint32_t rank = r.U32();
      if (static_cast<std::size_t>(rank) * 4 > r.remaining()) {
        throw TruncatedFileError("truncated weight file: dims of " + name);
      }
      Tensor t;
      t.dims.resize(rank);
      std::size_t n = 1;
      for (auto& d : t.dims) {
        d = r.U32();
        // Saturate so absurd dims read as truncation instead of overflowing.
        n = (d != 0 && n > r.remaining() / d) ? r.remaining() + 1 : n * d;
      }
      if (n > r.remaining() / sizeof(float)) {
        throw TruncatedFileError("truncated weight file: payload of " + name);
      }
      t.values.resize(n);
      r.Floats(t.values);
      if (c.Contains(name)) {
        throw DuplicateTensorError("duplicate tensor name: " + name);
      }
      c.Add(name, std::move(t));
    }
  } catch (const bytes::TruncatedError& e) {
    throw TruncatedFileError(std::string("truncated weight file: ") + e.what());
  }
  if (r.remaining() != 0) {
    throw WeightFormatError("trailing bytes after the last tensor");
  }
  return c;
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void SaveWeights(const std::filesystem::path& path, const WeightContainer& c) {
  WriteFileBytes(path, c.Serialize());
}

WeightContainer LoadWeights(const std::filesystem::path& path) {
  return WeightContainer::Deserialize(ReadFileBytes(path));
}

}  // namespace ntts::io
