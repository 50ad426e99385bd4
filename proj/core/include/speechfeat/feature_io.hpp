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

#ifndef SPEECHFEAT_FEATURE_IO_HPP_
#define SPEECHFEAT_FEATURE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>

#include "speechfeat/matrix.hpp"

namespace speechfeat {

// Shortest decimal string that parses back to exactly `value`. Integral
// values keep a trailing ".0" so every field reads as a real number.
std::string FormatReal(double value);

// One line per row, comma separated, '\n' terminated, no header.
std::string EncodeCsv(const Matrix& matrix);
void WriteCsv(const Matrix& matrix, const std::filesystem::path& path);

// SPFE binary layout, all little-endian:
//   offset 0   "SPFE"
//   offset 4   u16 version (1)
//   offset 6   u16 reserved (0)
//   offset 8   u32 rows
//   offset 12  u32 cols
//   offset 16  rows * cols IEEE-754 binary64, row-major
inline constexpr std::uint16_t kSpfeVersion = 1;
inline constexpr std::size_t kSpfeHeaderBytes = 16;

std::string EncodeSpfe(const Matrix& matrix);
void WriteSpfe(const Matrix& matrix, const std::filesystem::path& path);

}  // namespace speechfeat

#endif  // SPEECHFEAT_FEATURE_IO_HPP_
