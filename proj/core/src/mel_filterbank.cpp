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

#include "speechfeat/mel_filterbank.hpp"

#include <cmath>
#include <string>

#include "speechfeat/error.hpp"
#include "speechfeat/spectrum.hpp"

namespace speechfeat {
namespace {

constexpr double kMelScale = 2595.0;
constexpr double kMelBreak = 700.0;

}  // namespace

double HzToMel(double hz) {
  if (!(hz >= 0.0)) {
    throw Error(ErrorCode::kNegativeFrequency,
                "frequency " + std::to_string(hz) + " Hz is negative");
  }
  return kMelScale * std::log10(1.0 + hz / kMelBreak);
}

double MelToHz(double mel) {
  if (!(mel >= 0.0)) {
    throw Error(ErrorCode::kNegativeMel,
                "mel value " + std::to_string(mel) + " is negative");
  }
  return kMelBreak * (std::pow(10.0, mel / kMelScale) - 1.0);
}

FilterBank BuildFilterBank(std::size_t num_filters, std::size_t fft_length,
                           int sampling_frequency, double low_freq,
                           double high_freq) {
  if (num_filters < 1) {
    throw Error(ErrorCode::kInvalidParameter, "need at least one filter");
  }
  if (!IsPowerOfTwo(fft_length)) {
    throw Error(ErrorCode::kInvalidFftLength,
                "fft length " + std::to_string(fft_length) +
                    " is not a power of two");
  }
  if (sampling_frequency <= 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "sampling frequency must be positive");
  }
  const double nyquist = sampling_frequency / 2.0;
  if (!(low_freq >= 0.0 && low_freq < high_freq && high_freq <= nyquist)) {
    throw Error(ErrorCode::kInvalidBand,
                "band [" + std::to_string(low_freq) + ", " +
                    std::to_string(high_freq) + "] Hz must satisfy 0 <= low < "
                    "high <= " + std::to_string(nyquist));
  }

  const std::size_t num_edges = num_filters + 2;
  const double mel_low = HzToMel(low_freq);
  const double mel_high = HzToMel(high_freq);
  const double mel_step = (mel_high - mel_low) / static_cast<double>(num_edges - 1);

  std::vector<double> edges(num_edges);
  edges.front() = low_freq;
  edges.back() = high_freq;
  for (std::size_t j = 1; j + 1 < num_edges; ++j) {
    edges[j] = MelToHz(mel_low + mel_step * static_cast<double>(j));
  }

  const double bin_spacing =
      static_cast<double>(sampling_frequency) / static_cast<double>(fft_length);
  for (std::size_t j = 1; j < num_edges; ++j) {
    if (edges[j] - edges[j - 1] < bin_spacing) {
      throw Error(ErrorCode::kDegenerateFilter,
                  "filter edges " + std::to_string(edges[j - 1]) + " and " +
                      std::to_string(edges[j]) +
                      " Hz are closer than one bin (" +
                      std::to_string(bin_spacing) + " Hz); use fewer filters "
                      "or a longer fft");
    }
  }

  const std::size_t num_bins = fft_length / 2 + 1;
  FilterBank bank{Matrix(num_filters, num_bins), edges, fft_length,
                  sampling_frequency};
  for (std::size_t i = 0; i < num_filters; ++i) {
    const double left = edges[i];
    const double peak = edges[i + 1];
    const double right = edges[i + 2];
    auto row = bank.weights.row(i);
    for (std::size_t k = 0; k < num_bins; ++k) {
      const double f = static_cast<double>(k) * bin_spacing;
      if (f <= left || f >= right) continue;
      row[k] = f <= peak ? (f - left) / (peak - left)
                         : (right - f) / (right - peak);
    }
  }
  return bank;
}

}  // namespace speechfeat
