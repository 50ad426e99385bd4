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

#ifndef SPEECHFEAT_AUDIO_IO_HPP_
#define SPEECHFEAT_AUDIO_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace speechfeat {

// Mono signal with nominal range [-1, 1). An empty buffer is valid; stages
// that need samples check for themselves.
struct AudioBuffer {
  std::vector<double> samples;
  int sampling_frequency = 16000;
};

// Maps each 16-bit value v to v / 32768.
std::vector<double> SamplesToReal(std::span<const std::int16_t> raw);

// Parses an in-memory RIFF/WAVE image. Only 16-bit PCM with one or two
// channels is accepted; stereo is averaged to mono before scaling. Never
// reads outside `bytes`; any inconsistency raises Error.
AudioBuffer ParseWav(std::span<const std::byte> bytes);

// Reads `path` and hands its contents to ParseWav.
AudioBuffer ReadWav(const std::filesystem::path& path);

}  // namespace speechfeat

#endif  // SPEECHFEAT_AUDIO_IO_HPP_
