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

// Named tensor archive.
//
//   "NTTSW01" | u8 version (1) | u32 count |
//   count x [u32 name_len | name | u8 dtype (0 = f32) | u32 rank |
//            u32 dims[rank] | row-major f32 payload]
//
// All integers and floats are little-endian.

#ifndef NTTS_WEIGHTS_H_
#define NTTS_WEIGHTS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntts/tensor.h"

namespace ntts::io {

class WeightFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BadMagicError : public WeightFormatError {
 public:
  using WeightFormatError::WeightFormatError;
};
class BadVersionError : public WeightFormatError {
 public:
  using WeightFormatError::WeightFormatError;
};
class TruncatedFileError : public WeightFormatError {
 public:
  using WeightFormatError::WeightFormatError;
};
class DuplicateTensorError : public WeightFormatError {
 public:
  using WeightFormatError::WeightFormatError;
};
// A required tensor is absent or has the wrong dims.
class MissingTensorError : public WeightFormatError {
 public:
  using WeightFormatError::WeightFormatError;
};

struct Tensor {
  std::vector<std::uint32_t> dims;
  std::vector<float> values;  // row-major

  std::size_t size() const;
  bool operator==(const Tensor&) const = default;
};

class WeightContainer {
 public:
  // Throws DuplicateTensorError if `name` exists, std::invalid_argument if
  // the payload does not match the dims.
  void Add(const std::string& name, Tensor tensor);
  bool Contains(const std::string& name) const;
  // Throws MissingTensorError if absent or if dims differ from `dims`.
  const Tensor& Get(const std::string& name,
                    std::span<const std::uint32_t> dims) const;
  const Tensor& Get(const std::string& name) const;

  // Reads a rank-2 tensor into a matrix of the given storage layout.
  tensor::Matrix GetMatrix(const std::string& name, std::size_t rows,
                           std::size_t cols,
                           tensor::Layout layout = tensor::Layout::kColumnMajor)
      const;
  std::vector<float> GetVector(const std::string& name, std::size_t len) const;

  std::size_t size() const { return tensors_.size(); }
  const std::map<std::string, Tensor>& tensors() const { return tensors_; }

  std::vector<std::uint8_t> Serialize() const;
  static WeightContainer Deserialize(std::span<const std::uint8_t> bytes);

  bool operator==(const WeightContainer&) const = default;

 private:
  std::map<std::string, Tensor> tensors_;
};

void SaveWeights(const std::filesystem::path& path, const WeightContainer& c);
WeightContainer LoadWeights(const std::filesystem::path& path);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes);

}  // namespace ntts::io

#endif  // NTTS_WEIGHTS_H_
