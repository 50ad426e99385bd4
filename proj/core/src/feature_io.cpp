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

#include "speechfeat/feature_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "speechfeat/error.hpp"

namespace speechfeat {
namespace {

void AppendLe(std::string& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xffu));
  }
}

void WriteBytes(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

}  // namespace

std::string FormatReal(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, end);
  if (std::isfinite(value) &&
      s.find_first_of(".e") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string EncodeCsv(const Matrix& matrix) {
  std::string out;
  out.reserve(matrix.rows() * (matrix.cols() * 24 + 1));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    auto row = matrix.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.push_back(',');
      out += FormatReal(row[c]);
    }
    out.push_back('\n');
  }
  return out;
}

void WriteCsv(const Matrix& matrix, const std::filesystem::path& path) {
  WriteBytes(EncodeCsv(matrix), path);
}

std::string EncodeSpfe(const Matrix& matrix) {
  constexpr auto kMaxDim = std::numeric_limits<std::uint32_t>::max();
  if (matrix.rows() > kMaxDim || matrix.cols() > kMaxDim) {
    throw Error(ErrorCode::kIoError, "matrix too large for SPFE");
  }
  std::string out = "SPFE";
  out.reserve(kSpfeHeaderBytes + 8 * matrix.values().size());
  AppendLe(out, kSpfeVersion, 2);
  AppendLe(out, 0, 2);
  AppendLe(out, matrix.rows(), 4);
  AppendLe(out, matrix.cols(), 4);
  for (double v : matrix.values()) {
    AppendLe(out, std::bit_cast<std::uint64_t>(v), 8);
  }
  return out;
}

void WriteSpfe(const Matrix& matrix, const std::filesystem::path& path) {
  WriteBytes(EncodeSpfe(matrix), path);
}

}  // namespace speechfeat
