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

#ifndef SPEECHFEAT_PREPROCESS_HPP_
#define SPEECHFEAT_PREPROCESS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "speechfeat/audio_io.hpp"
#include "speechfeat/matrix.hpp"

namespace speechfeat {

// T x L matrix whose row t is the source slice [t*S, t*S + L), with the
// source zero-extended when padding was requested.
struct FrameMatrix {
  Matrix data;
  int sampling_frequency = 0;
  std::size_t frame_length = 0;
  std::size_t frame_stride = 0;

  std::size_t num_frames() const { return data.rows(); }
};

enum class WindowType { kRectangular, kHamming, kHanning };

std::string_view WindowTypeName(WindowType type);
// Accepts "rectangular", "hamming" or "hanning".
WindowType ParseWindowType(std::string_view name);

// y[0] = x[0], y[t] = x[t] - alpha * x[t-1]. alpha must lie in [0, 1).
AudioBuffer PreEmphasis(const AudioBuffer& signal, double alpha);

// Converts a duration to a sample count, rounding half away from zero.
std::size_t SecondsToSamples(double seconds, int sampling_frequency);

// Number of frames produced for a signal of `num_samples`.
//   no padding: floor((N - L) / S) + 1, requires N >= L
//   padding:    ceil((N - L) / S) + 1, or 1 when N <= L
std::size_t NumFrames(std::size_t num_samples, std::size_t frame_length,
                      std::size_t frame_stride, bool zero_padding);

// Frames a signal using lengths expressed in samples.
FrameMatrix StackFramesSamples(const AudioBuffer& signal,
                               std::size_t frame_length,
                               std::size_t frame_stride, bool zero_padding);

// Frames a signal using durations in seconds, converted with
// SecondsToSamples.
FrameMatrix StackFrames(const AudioBuffer& signal, double frame_length_s,
                        double frame_stride_s, bool zero_padding = true);

// Symmetric window of the given length; every type yields {1} for length 1.
std::vector<double> MakeWindow(WindowType type, std::size_t length);

FrameMatrix ApplyWindow(const FrameMatrix& frames, WindowType type);
void ApplyWindowInPlace(FrameMatrix& frames, std::span<const double> window);

}  // namespace speechfeat

#endif  // SPEECHFEAT_PREPROCESS_HPP_
