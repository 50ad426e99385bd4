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

#ifndef SPEECHFEAT_MEL_FILTERBANK_HPP_
#define SPEECHFEAT_MEL_FILTERBANK_HPP_

#include <cstddef>
#include <vector>

#include "speechfeat/matrix.hpp"

namespace speechfeat {

// mel = 2595 * log10(1 + f / 700)
double HzToMel(double hz);
// f = 700 * (10^(mel / 2595) - 1)
double MelToHz(double mel);

// M x (N/2 + 1) triangular filters. Filter i (0-based) rises linearly in Hz
// from edges[i] to edges[i + 1] and falls back to zero at edges[i + 2].
// Triangles are evaluated at the exact bin frequencies k * fs / N, so
// neighbouring filters sum to one between the first and last peaks.
struct FilterBank {
  Matrix weights;
  std::vector<double> edge_frequencies;  // M + 2 values, strictly increasing
  std::size_t fft_length = 0;
  int sampling_frequency = 0;

  std::size_t num_filters() const { return weights.rows(); }
  std::size_t num_bins() const { return weights.cols(); }
  double peak_frequency(std::size_t i) const { return edge_frequencies[i + 1]; }
};

// Throws InvalidBand unless 0 <= low < high <= fs/2, and DegenerateFilter
// when two adjacent edges are closer than one bin spacing (fs / N).
FilterBank BuildFilterBank(std::size_t num_filters, std::size_t fft_length,
                           int sampling_frequency, double low_freq,
                           double high_freq);

}  // namespace speechfeat

#endif  // SPEECHFEAT_MEL_FILTERBANK_HPP_
