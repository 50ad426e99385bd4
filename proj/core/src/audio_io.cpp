/* Copyright 2026 The speechfeat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "speechfeat/audio_io.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "speechfeat/error.hpp"

namespace speechfeat {
namespace {

constexpr double kInt16Scale = 32768.0;
constexpr std::uint16_t kFormatPcm = 1;

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t position() const { return pos_; }

  bool Tag(const char (&tag)[5]) {
    Require(4, "chunk tag");
    bool match = std::memcmp(bytes_.data() + pos_, tag, 4) == 0;
    pos_ += 4;
    return match;
  }

  std::string ReadTag() {
    Require(4, "chunk tag");
    std::string tag(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return tag;
  }

  std::uint16_t U16() {
    Require(2, "u16 field");
    auto b = [&](std::size_t i) {
      return static_cast<std::uint16_t>(bytes_[pos_ + i]);
    };
    std::uint16_t v = static_cast<std::uint16_t>(b(0) | (b(1) << 8));
    pos_ += 2;
    return v;
  }

  std::uint32_t U32() {
    Require(4, "u32 field");
    auto b = [&](std::size_t i) {
      return static_cast<std::uint32_t>(bytes_[pos_ + i]);
    };
    std::uint32_t v = b(0) | (b(1) << 8) | (b(2) << 16) | (b(3) << 24);
    pos_ += 4;
    return v;
  }

  std::span<const std::byte> Take(std::size_t n, const char* what) {
    Require(n, what);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  void Skip(std::size_t n, const char* what) { Take(n, what); }

 private:
  void Require(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw Error(ErrorCode::kMalformedWav,
                  std::string("truncated ") + what + " at byte " +
                      std::to_string(pos_));
    }
  }

  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

FormatChunk ParseFormat(std::span<const std::byte> body) {
  if (body.size() < 16) {
    throw Error(ErrorCode::kMalformedWav,
                "fmt chunk shorter than 16 bytes");
  }
  ByteReader r(body);
  FormatChunk fmt;
  fmt.format = r.U16();
  fmt.channels = r.U16();
  fmt.sample_rate = r.U32();
  r.U32();  // byte rate
  r.U16();  // block align
  fmt.bits_per_sample = r.U16();

  if (fmt.format != kFormatPcm) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "format code " + std::to_string(fmt.format) +
                    " is not uncompressed PCM");
  }
  if (fmt.bits_per_sample != 16) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "bit depth " + std::to_string(fmt.bits_per_sample) +
                    " is not 16");
  }
  if (fmt.channels == 0) {
    throw Error(ErrorCode::kMalformedWav, "zero channels");
  }
  if (fmt.channels > 2) {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(fmt.channels) + " channels");
  }
  if (fmt.sample_rate == 0 ||
      fmt.sample_rate > static_cast<std::uint32_t>(INT32_MAX)) {
    throw Error(ErrorCode::kMalformedWav,
                "invalid sample rate " + std::to_string(fmt.sample_rate));
  }
  return fmt;
}

std::int16_t LoadI16(std::span<const std::byte> data, std::size_t i) {
  auto lo = static_cast<std::uint16_t>(data[2 * i]);
  auto hi = static_cast<std::uint16_t>(data[2 * i + 1]);
  return static_cast<std::int16_t>(static_cast<std::uint16_t>(lo | (hi << 8)));
}

}  // namespace

std::vector<double> SamplesToReal(std::span<const std::int16_t> raw) {
  std::vector<double> out;
  out.reserve(raw.size());
  for (std::int16_t v : raw) out.push_back(v / kInt16Scale);
  return out;
}

AudioBuffer ParseWav(std::span<const std::byte> bytes) {
  ByteReader r(bytes);
  if (!r.Tag("RIFF")) throw Error(ErrorCode::kMalformedWav, "missing RIFF magic");
  r.U32();  // RIFF size; chunk walking is bounded by the buffer instead
  if (!r.Tag("WAVE")) throw Error(ErrorCode::kMalformedWav, "missing WAVE magic");

  std::optional<FormatChunk> fmt;
  std::optional<std::span<const std::byte>> data;
  while (r.remaining() > 0 && !(fmt && data)) {
    std::string tag = r.ReadTag();
    std::uint32_t size = r.U32();
    auto body = r.Take(size, ("'" + tag + "' chunk body").c_str());
    // Odd-sized chunks carry one pad byte, which may be absent at EOF.
    if ((size & 1u) && r.remaining() > 0) r.Skip(1, "pad byte");

    if (tag == "fmt ") {
      if (fmt) throw Error(ErrorCode::kMalformedWav, "duplicate fmt chunk");
      fmt = ParseFormat(body);
    } else if (tag == "data") {
      if (!fmt) throw Error(ErrorCode::kMalformedWav, "data chunk before fmt");
      data = body;
    }
  }
  if (!fmt) throw Error(ErrorCode::kMalformedWav, "missing fmt chunk");
  if (!data) throw Error(ErrorCode::kMalformedWav, "missing data chunk");

  const std::size_t frame_bytes = 2u * fmt->channels;
  if (data->size() % frame_bytes != 0) {
    throw Error(ErrorCode::kMalformedWav,
                "data chunk size " + std::to_string(data->size()) +
                    " is not a multiple of the block size");
  }

  AudioBuffer out;
  out.sampling_frequency = static_cast<int>(fmt->sample_rate);
  const std::size_t num_frames = data->size() / frame_bytes;
  out.samples.resize(num_frames);
  if (fmt->channels == 1) {
    for (std::size_t i = 0; i < num_frames; ++i) {
      out.samples[i] = LoadI16(*data, i) / kInt16Scale;
    }
  } else {
    for (std::size_t i = 0; i < num_frames; ++i) {
      double left = LoadI16(*data, 2 * i);
      double right = LoadI16(*data, 2 * i + 1);
      out.samples[i] = (left + right) / 2.0 / kInt16Scale;
    }
  }
  return out;
}

AudioBuffer ReadWav(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw Error(ErrorCode::kMissingFile, path.string() + " is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingFile, "cannot open " + path.string());
  }
  std::vector<char> raw((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kMissingFile, "cannot read " + path.string());
  }
  return ParseWav(std::as_bytes(std::span<const char>(raw)));
}

}  // namespace speechfeat
