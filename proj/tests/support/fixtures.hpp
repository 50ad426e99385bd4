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

#ifndef SPEECHFEAT_TESTS_SUPPORT_FIXTURES_HPP_
#define SPEECHFEAT_TESTS_SUPPORT_FIXTURES_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "speechfeat/matrix.hpp"

namespace speechfeat::testing {

inline void PutLe(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct WavSpec {
  std::uint16_t format = 1;
  std::uint16_t channels = 1;
  std::uint32_t sample_rate = 16000;
  std::uint16_t bits = 16;
  bool add_list_chunk = false;
};

// Canonical RIFF/WAVE image holding interleaved 16-bit samples.
inline std::string MakeWav(std::span<const std::int16_t> interleaved,
                           const WavSpec& spec = {}) {
  std::string fmt;
  PutLe(fmt, spec.format, 2);
  PutLe(fmt, spec.channels, 2);
  PutLe(fmt, spec.sample_rate, 4);
  const std::uint32_t block = spec.channels * (spec.bits / 8u);
  PutLe(fmt, spec.sample_rate * block, 4);
  PutLe(fmt, block, 2);
  PutLe(fmt, spec.bits, 2);

  std::string body = "WAVE";
  body += "fmt ";
  PutLe(body, fmt.size(), 4);
  body += fmt;
  if (spec.add_list_chunk) {
    body += "LIST";
    PutLe(body, 5, 4);
    body += "INFOx";
    body.push_back('\0');  // pad byte for the odd-sized chunk
  }
  body += "data";
  PutLe(body, interleaved.size() * 2, 4);
  for (std::int16_t s : interleaved) PutLe(body, static_cast<std::uint16_t>(s), 2);

  std::string out = "RIFF";
  PutLe(out, body.size(), 4);
  return out + body;
}

inline std::span<const std::byte> AsBytes(const std::string& s) {
  return std::as_bytes(std::span<const char>(s.data(), s.size()));
}

inline void WriteFile(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Test-only SPFE decoder, written against the documented byte layout.
inline Matrix DecodeSpfe(const std::string& bytes) {
  auto u = [&](std::size_t off, int n) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes.at(off + i))) << (8 * i);
    }
    return v;
  };
  if (bytes.size() < 16 || bytes.compare(0, 4, "SPFE") != 0) {
    throw std::runtime_error("bad SPFE header");
  }
  if (u(4, 2) != 1 || u(6, 2) != 0) throw std::runtime_error("bad SPFE version");
  const std::size_t rows = u(8, 4), cols = u(12, 4);
  if (bytes.size() != 16 + 8 * rows * cols) throw std::runtime_error("bad SPFE size");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.values()[i] = std::bit_cast<double>(u(16 + 8 * i, 8));
  }
  return m;
}

inline std::vector<std::int16_t> SineI16(double freq, int fs, std::size_t n,
                                         double amplitude = 0.5) {
  std::vector<std::int16_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int16_t>(std::lround(
        amplitude * 32767.0 * std::sin(2.0 * std::numbers::pi * freq * i / fs)));
  }
  return out;
}

inline std::vector<double> RandomVector(std::mt19937_64& rng, std::size_t n,
                                        double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline Matrix RandomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                           double lo = -1.0, double hi = 1.0) {
  Matrix m(rows, cols);
  auto v = RandomVector(rng, rows * cols, lo, hi);
  std::copy(v.begin(), v.end(), m.values().begin());
  return m;
}

}  // namespace speechfeat::testing

#endif  // SPEECHFEAT_TESTS_SUPPORT_FIXTURES_HPP_
