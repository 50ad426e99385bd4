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

#ifndef SPEECHFEAT_FEATURES_HPP_
#define SPEECHFEAT_FEATURES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "speechfeat/audio_io.hpp"
#include "speechfeat/matrix.hpp"
#include "speechfeat/mel_filterbank.hpp"
#include "speechfeat/preprocess.hpp"
#include "speechfeat/spectrum.hpp"

namespace speechfeat {

enum class FeatureKind { kMfe, kLmfe, kMfcc, kDerivativeStacked };

std::string_view FeatureKindName(FeatureKind kind);

struct FeatureMatrix {
  Matrix data;
  FeatureKind kind = FeatureKind::kMfe;
  // Total power per frame, epsilon-floored. Empty for derivative-stacked
  // matrices.
  std::vector<double> frame_energies;

  std::size_t num_frames() const { return data.rows(); }
  std::size_t dim() const { return data.cols(); }
};

// Floor applied to filterbank and frame energies before any log.
double EnergyFloor();

struct FeatureConfig {
  double alpha = 0.97;
  double frame_length_s = 0.020;
  double frame_stride_s = 0.010;
  WindowType window = WindowType::kRectangular;
  // Unset means the smallest power of two >= the frame length in samples.
  std::optional<std::size_t> fft_length;
  std::size_t num_filters = 40;
  std::size_t num_cepstral = 13;
  double low_freq = 0.0;
  // Unset means fs / 2.
  std::optional<double> high_freq;
  bool dc_elimination = false;
  bool zero_padding = true;
};

// Checks the sampling-rate independent constraints: frame durations within
// [0.001, 1.0] s, alpha in [0, 1), 1 <= C <= M (C < M with dc elimination),
// fft length a power of two, non-negative low frequency. Throws
// InvalidParameter / InvalidFftLength.
void ValidateConfig(const FeatureConfig& config);

// Resolved per-sampling-rate pipeline: window, FFT tables and filterbank
// are built once and reused for every signal. Immutable after construction
// and safe to share between threads.
class FeaturePipeline {
 public:
  FeaturePipeline(const FeatureConfig& config, int sampling_frequency);

  const FeatureConfig& config() const { return config_; }
  int sampling_frequency() const { return sampling_frequency_; }
  std::size_t frame_length() const { return frame_length_; }
  std::size_t frame_stride() const { return frame_stride_; }
  std::size_t fft_length() const { return fft_.size(); }
  const FilterBank& filterbank() const { return filterbank_; }

  FeatureMatrix Mfe(const AudioBuffer& signal) const;
  FeatureMatrix Lmfe(const AudioBuffer& signal) const;
  FeatureMatrix Mfcc(const AudioBuffer& signal) const;

 private:
  void CheckRate(const AudioBuffer& signal) const;

  FeatureConfig config_;
  int sampling_frequency_;
  std::size_t frame_length_;
  std::size_t frame_stride_;
  std::vector<double> window_;
  RealFft fft_;
  FilterBank filterbank_;
};

// Mel filterbank energies: pre-emphasis, framing, windowing, power spectrum,
// then E = P * W^T with non-positive entries replaced by EnergyFloor().
FeatureMatrix Mfe(const AudioBuffer& signal, const FeatureConfig& config);
// Natural log of Mfe.
FeatureMatrix Lmfe(const AudioBuffer& signal, const FeatureConfig& config);
FeatureMatrix Mfcc(const AudioBuffer& signal, const FeatureConfig& config);

// Orthonormal DCT-II evaluated from its defining sum.
std::vector<double> DctIIOrtho(std::span<const double> row);

// Cepstra from log filterbank energies: DCT-II of each row, keeping
// coefficients [0, C) or, with dc_elimination, [1, C].
FeatureMatrix MfccFromLmfe(const FeatureMatrix& lmfe, std::size_t num_cepstral,
                           bool dc_elimination);

// Regression deltas over +-half_width frames with edge replication, stacked
// as [static | delta | delta-delta].
FeatureMatrix ExtractDerivative(const FeatureMatrix& features,
                                std::size_t half_width = 2);

// Delta block alone, exposed for tests and for callers that want first-order
// dynamics only.
Matrix ComputeDelta(const Matrix& features, std::size_t half_width);

}  // namespace speechfeat

#endif  // SPEECHFEAT_FEATURES_HPP_
