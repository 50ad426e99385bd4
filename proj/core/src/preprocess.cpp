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

#include "speechfeat/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "speechfeat/error.hpp"

namespace speechfeat {

std::string_view WindowTypeName(WindowType type) {
  switch (type) {
    case WindowType::kRectangular: return "rectangular";
    case WindowType::kHamming: return "hamming";
    case WindowType::kHanning: return "hanning";
  }
  return "rectangular";
}

WindowType ParseWindowType(std::string_view name) {
  if (name == "rectangular") return WindowType::kRectangular;
  if (name == "hamming") return WindowType::kHamming;
  if (name == "hanning") return WindowType::kHanning;
  throw Error(ErrorCode::kInvalidParameter,
              "unknown window type '" + std::string(name) + "'");
}

AudioBuffer PreEmphasis(const AudioBuffer& signal, double alpha) {
  if (signal.samples.empty()) {
    throw Error(ErrorCode::kEmptySignal, "pre-emphasis of an empty signal");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "pre-emphasis coefficient must lie in [0, 1)");
  }
  const auto& x = signal.samples;
  AudioBuffer out{std::vector<double>(x.size()), signal.sampling_frequency};
  out.samples[0] = x[0];
  for (std::size_t t = 1; t < x.size(); ++t) {
    out.samples[t] = x[t] - alpha * x[t - 1];
  }
  return out;
}

std::size_t SecondsToSamples(double seconds, int sampling_frequency) {
  if (!(seconds > 0.0) || !std::isfinite(seconds)) {
    throw Error(ErrorCode::kInvalidParameter,
                "duration must be positive and finite");
  }
  if (sampling_frequency <= 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "sampling frequency must be positive");
  }
  // std::round rounds half away from zero.
  double n = std::round(seconds * sampling_frequency);
  if (n > 1e12) {
    throw Error(ErrorCode::kInvalidParameter, "duration too large");
  }
  return static_cast<std::size_t>(n);
}

std::size_t NumFrames(std::size_t num_samples, std::size_t frame_length,
                      std::size_t frame_stride, bool zero_padding) {
  if (frame_length == 0 || frame_stride == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "frame length and stride must be at least one sample");
  }
  if (num_samples <= frame_length) {
    if (num_samples < frame_length && !zero_padding) {
      throw Error(ErrorCode::kFrameTooLong,
                  "signal of " + std::to_string(num_samples) +
                      " samples is shorter than one frame of " +
                      std::to_string(frame_length));
    }
    return 1;
  }
  const std::size_t excess = num_samples - frame_length;
  if (zero_padding) return (excess + frame_stride - 1) / frame_stride + 1;
  return excess / frame_stride + 1;
}

FrameMatrix StackFramesSamples(const AudioBuffer& signal,
                               std::size_t frame_length,
                               std::size_t frame_stride, bool zero_padding) {
  if (signal.sampling_frequency <= 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "sampling frequency must be positive");
  }
  const auto& x = signal.samples;
  const std::size_t num_frames =
      NumFrames(x.size(), frame_length, frame_stride, zero_padding);

  FrameMatrix frames{Matrix(num_frames, frame_length), signal.sampling_frequency,
                     frame_length, frame_stride};
  for (std::size_t t = 0; t < num_frames; ++t) {
    const std::size_t begin = t * frame_stride;
    const std::size_t end = std::min(begin + frame_length, x.size());
    auto row = frames.data.row(t);
    if (begin < end) {
      std::copy(x.begin() + static_cast<std::ptrdiff_t>(begin),
                x.begin() + static_cast<std::ptrdiff_t>(end), row.begin());
    }
    // Samples past the end stay zero from the Matrix fill.
  }
  return frames;
}

FrameMatrix StackFrames(const AudioBuffer& signal, double frame_length_s,
                        double frame_stride_s, bool zero_padding) {
  const std::size_t length =
      SecondsToSamples(frame_length_s, signal.sampling_frequency);
  const std::size_t stride =
      SecondsToSamples(frame_stride_s, signal.sampling_frequency);
  if (length == 0 || stride == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "frame length and stride must round to at least one sample");
  }
  return StackFramesSamples(signal, length, stride, zero_padding);
}

std::vector<double> MakeWindow(WindowType type, std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (length <= 1 || type == WindowType::kRectangular) return w;

  const bool hamming = type == WindowType::kHamming;
  const double a0 = hamming ? 0.54 : 0.5;
  const double a1 = hamming ? 0.46 : 0.5;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(length - 1);
  // Evaluate the first half and mirror it so the window is exactly symmetric.
  for (std::size_t n = 0; n <= (length - 1) / 2; ++n) {
    double v = a0 - a1 * std::cos(step * static_cast<double>(n));
    w[n] = v;
    w[length - 1 - n] = v;
  }
  return w;
}

void ApplyWindowInPlace(FrameMatrix& frames, std::span<const double> window) {
  if (window.size() != frames.data.cols()) {
    throw Error(ErrorCode::kInvalidParameter,
                "window length does not match frame length");
  }
  for (std::size_t t = 0; t < frames.data.rows(); ++t) {
    auto row = frames.data.row(t);
    for (std::size_t n = 0; n < row.size(); ++n) row[n] *= window[n];
  }
}

FrameMatrix ApplyWindow(const FrameMatrix& frames, WindowType type) {
  FrameMatrix out = frames;
  if (type == WindowType::kRectangular) return out;
  ApplyWindowInPlace(out, MakeWindow(type, frames.data.cols()));
  return out;
}

}  // namespace speechfeat
