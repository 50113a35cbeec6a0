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

// Little-endian byte packing shared by the on-disk formats and the decoder
// state cache.

#ifndef NTTS_BYTES_H_
#define NTTS_BYTES_H_

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ntts::bytes {

static_assert(std::endian::native == std::endian::little,
              "on-disk formats assume a little-endian host");

class TruncatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Writer {
 public:
  void Raw(const void* data, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    buf_.insert(buf_.end(), p, p + n);
  }
  void Str(std::string_view s) { Raw(s.data(), s.size()); }
  void U8(std::uint8_t v) { buf_.push_back(v); }
  void U16(std::uint16_t v) { Raw(&v, sizeof v); }
  void U32(std::uint32_t v) { Raw(&v, sizeof v); }
  void U64(std::uint64_t v) { Raw(&v, sizeof v); }
  void I32(std::int32_t v) { Raw(&v, sizeof v); }
  void F32(float v) { Raw(&v, sizeof v); }
  void Floats(std::span<const float> v) { Raw(v.data(), v.size_bytes()); }
  // u32 length prefix followed by the values.
  void FloatVec(std::span<const float> v) {
    U32(static_cast<std::uint32_t>(v.size()));
    Floats(v);
  }

  const std::vector<std::uint8_t>& buffer() const { return buf_; }
  std::vector<std::uint8_t> Take() { return std::move(buf_); }

 private:
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  void Raw(void* out, std::size_t n) {
    Need(n);
    std::memcpy(out, data_.data() + pos_, n);
    pos_ += n;
  }
  std::string Str(std::size_t n) {
    std::string s(n, '\0');
    Raw(s.data(), n);
    return s;
  }
  std::uint8_t U8() { return Get<std::uint8_t>(); }
  std::uint16_t U16() { return Get<std::uint16_t>(); }
  std::uint32_t U32() { return Get<std::uint32_t>(); }
  std::uint64_t U64() { return Get<std::uint64_t>(); }
  std::int32_t I32() { return Get<std::int32_t>(); }
  float F32() { return Get<float>(); }
  void Floats(std::span<float> out) { Raw(out.data(), out.size_bytes()); }
  std::vector<float> FloatVec() {
    const std::uint32_t n = U32();
    Need(static_cast<std::size_t>(n) * sizeof(float));
    std::vector<float> v(n);
    Floats(v);
    return v;
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t position() const { return pos_; }

 private:
  template <typename T>
  T Get() {
    T v;
    Raw(&v, sizeof v);
    return v;
  }
  void Need(std::size_t n) const {
    if (n > remaining()) {
      throw TruncatedError("truncated input: need " + std::to_string(n) +
                           " bytes at offset " + std::to_string(pos_) +
                           ", have " + std::to_string(remaining()));
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace ntts::bytes

#endif  // NTTS_BYTES_H_
