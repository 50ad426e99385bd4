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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "speechfeat/error.hpp"
#include "support/fixtures.hpp"

namespace speechfeat {
namespace {

using testing::AsBytes;
using testing::MakeWav;
using testing::WavSpec;

ErrorCode CodeOf(const std::string& bytes) {
  try {
    ParseWav(AsBytes(bytes));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kIoError;
}

TEST(SamplesToRealTest, ScalesByFullScale) {
  const std::vector<std::int16_t> raw = {0, -32768, 32767, 16384};
  const auto out = SamplesToReal(raw);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], 0.0);
  EXPECT_EQ(out[1], -1.0);
  EXPECT_EQ(out[2], 0.999969482421875);
  EXPECT_EQ(out[3], 0.5);
}

TEST(SamplesToRealTest, MagnitudeAtMostOneOnlyAtMinimum) {
  for (int v = -32768; v <= 32767; ++v) {
    const std::int16_t s = static_cast<std::int16_t>(v);
    const double r = SamplesToReal(std::span(&s, 1))[0];
    ASSERT_LE(std::abs(r), 1.0);
    if (v != -32768) ASSERT_LT(std::abs(r), 1.0);
  }
}

TEST(ParseWavTest, MonoSilence) {
  const std::vector<std::int16_t> raw = {0, 0, 0};
  const AudioBuffer a = ParseWav(AsBytes(MakeWav(raw)));
  EXPECT_EQ(a.sampling_frequency, 16000);
  EXPECT_EQ(a.samples, (std::vector<double>{0.0, 0.0, 0.0}));
}

TEST(ParseWavTest, MonoHalfScale) {
  const std::vector<std::int16_t> raw = {16384, -16384};
  const AudioBuffer a = ParseWav(AsBytes(MakeWav(raw)));
  EXPECT_EQ(a.samples, (std::vector<double>{0.5, -0.5}));
}

TEST(ParseWavTest, StereoIsChannelMean) {
  const std::vector<std::int16_t> raw = {100, 300, -7, 8};
  WavSpec spec;
  spec.channels = 2;
  spec.sample_rate = 44100;
  const AudioBuffer a = ParseWav(AsBytes(MakeWav(raw, spec)));
  EXPECT_EQ(a.sampling_frequency, 44100);
  ASSERT_EQ(a.samples.size(), 2u);
  EXPECT_EQ(a.samples[0], 200.0 / 32768.0);
  EXPECT_EQ(a.samples[1], 0.5 / 32768.0);
}

TEST(ParseWavTest, SkipsUnknownChunksWithPadByte) {
  const std::vector<std::int16_t> raw = {1, 2, 3};
  WavSpec spec;
  spec.add_list_chunk = true;
  const AudioBuffer a = ParseWav(AsBytes(MakeWav(raw, spec)));
  EXPECT_EQ(a.samples, SamplesToReal(raw));
}

TEST(ParseWavTest, EmptyDataChunkIsValid) {
  const AudioBuffer a = ParseWav(AsBytes(MakeWav({})));
  EXPECT_TRUE(a.samples.empty());
}

TEST(ParseWavTest, RejectsBadMagic) {
  std::string bytes = MakeWav(std::vector<std::int16_t>{1});
  bytes[0] = 'X';
  EXPECT_EQ(CodeOf(bytes), ErrorCode::kMalformedWav);
  bytes = MakeWav(std::vector<std::int16_t>{1});
  bytes[8] = 'X';
  EXPECT_EQ(CodeOf(bytes), ErrorCode::kMalformedWav);
}

TEST(ParseWavTest, RejectsTruncatedData) {
  std::string bytes = MakeWav(std::vector<std::int16_t>(100, 7));
  bytes.resize(bytes.size() - 10);
  EXPECT_EQ(CodeOf(bytes), ErrorCode::kMalformedWav);
}

TEST(ParseWavTest, RejectsMissingChunks) {
  std::string riff_only = "RIFF";
  testing::PutLe(riff_only, 4, 4);
  riff_only += "WAVE";
  EXPECT_EQ(CodeOf(riff_only), ErrorCode::kMalformedWav);

  // fmt present, data absent.
  std::string bytes = MakeWav(std::vector<std::int16_t>{1, 2});
  bytes.resize(12 + 8 + 16);
  EXPECT_EQ(CodeOf(bytes), ErrorCode::kMalformedWav);
}

TEST(ParseWavTest, RejectsUnsupportedFormats) {
  const std::vector<std::int16_t> raw = {1, 2, 3, 4, 5, 6};
  WavSpec float_spec;
  float_spec.format = 3;
  EXPECT_EQ(CodeOf(MakeWav(raw, float_spec)), ErrorCode::kUnsupportedFormat);
  WavSpec eight_bit;
  eight_bit.bits = 8;
  EXPECT_EQ(CodeOf(MakeWav(raw, eight_bit)), ErrorCode::kUnsupportedFormat);
  WavSpec three_channels;
  three_channels.channels = 3;
  EXPECT_EQ(CodeOf(MakeWav(raw, three_channels)), ErrorCode::kUnsupportedFormat);
}

TEST(ParseWavTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-32768, 32767);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int16_t> raw(rng() % 2000);
    for (auto& s : raw) s = static_cast<std::int16_t>(dist(rng));
    const AudioBuffer a = ParseWav(AsBytes(MakeWav(raw)));
    ASSERT_EQ(a.samples, SamplesToReal(raw));
  }
}

// Random byte strings and mutated valid files must yield either a buffer or
// a typed Error, never a crash or foreign exception.
TEST(ParseWavTest, FuzzNeverEscapesTypedErrors) {
  std::mt19937_64 rng(1234);
  const std::string valid = MakeWav(testing::SineI16(440, 8000, 64));
  for (int trial = 0; trial < 20000; ++trial) {
    std::string bytes;
    if (trial % 2 == 0) {
      bytes.resize(rng() % 96);
      for (char& c : bytes) c = static_cast<char>(rng());
      if (trial % 4 == 0 && bytes.size() >= 12) {
        bytes.replace(0, 4, "RIFF");
        bytes.replace(8, 4, "WAVE");
      }
    } else {
      bytes = valid;
      const int flips = 1 + static_cast<int>(rng() % 4);
      for (int f = 0; f < flips; ++f) {
        bytes[rng() % 48] = static_cast<char>(rng());
      }
      if (rng() % 3 == 0) bytes.resize(rng() % bytes.size());
    }
    try {
      const AudioBuffer a = ParseWav(AsBytes(bytes));
      ASSERT_GT(a.sampling_frequency, 0);
    } catch (const Error&) {
    }
  }
}

TEST(ReadWavTest, MissingFile) {
  try {
    ReadWav("/nonexistent/definitely/missing.wav");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingFile);
  }
}

TEST(ReadWavTest, ReadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "speechfeat_read_wav_test.wav";
  const std::vector<std::int16_t> raw = {16384, -16384, 5};
  testing::WriteFile(path, MakeWav(raw));
  const AudioBuffer a = ReadWav(path);
  EXPECT_EQ(a.samples, SamplesToReal(raw));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace speechfeat
