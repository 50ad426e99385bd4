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

#include "speechfeat/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "speechfeat/error.hpp"

namespace speechfeat {
namespace {

constexpr double kMinFrameSeconds = 0.001;
constexpr double kMaxFrameSeconds = 1.0;

void CheckDuration(double seconds, const char* name) {
  if (!(seconds >= kMinFrameSeconds && seconds <= kMaxFrameSeconds)) {
    throw Error(ErrorCode::kInvalidParameter,
                std::string(name) + " of " + std::to_string(seconds) +
                    " s is outside [0.001, 1.0] s");
  }
}

}  // namespace

std::string_view FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kMfe: return "mfe";
    case FeatureKind::kLmfe: return "lmfe";
    case FeatureKind::kMfcc: return "mfcc";
    case FeatureKind::kDerivativeStacked: return "derivative_stacked";
  }
  return "mfe";
}

double EnergyFloor() { return std::numeric_limits<double>::epsilon(); }

void ValidateConfig(const FeatureConfig& config) {
  if (!(config.alpha >= 0.0 && config.alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "pre-emphasis coefficient must lie in [0, 1)");
  }
  CheckDuration(config.frame_length_s, "frame length");
  CheckDuration(config.frame_stride_s, "frame stride");
  if (config.num_filters < 1) {
    throw Error(ErrorCode::kInvalidParameter, "need at least one filter");
  }
  if (config.num_cepstral < 1 || config.num_cepstral > config.num_filters) {
    throw Error(ErrorCode::kInvalidParameter,
                "number of cepstral coefficients must lie in [1, " +
                    std::to_string(config.num_filters) + "]");
  }
  if (config.dc_elimination && config.num_cepstral == config.num_filters) {
    throw Error(ErrorCode::kInvalidParameter,
                "dc elimination keeps coefficients 1..C, so C must be below "
                "the number of filters");
  }
  if (config.fft_length && !IsPowerOfTwo(*config.fft_length)) {
    throw Error(ErrorCode::kInvalidFftLength,
                "fft length " + std::to_string(*config.fft_length) +
                    " is not a power of two");
  }
  if (!(config.low_freq >= 0.0)) {
    throw Error(ErrorCode::kInvalidBand, "low frequency must be >= 0");
  }
  if (config.high_freq && !(*config.high_freq > config.low_freq)) {
    throw Error(ErrorCode::kInvalidBand,
                "high frequency must exceed low frequency");
  }
}

FeaturePipeline::FeaturePipeline(const FeatureConfig& config,
                                 int sampling_frequency)
    : config_((ValidateConfig(config), config)),
      sampling_frequency_(sampling_frequency),
      frame_length_(SecondsToSamples(config.frame_length_s, sampling_frequency)),
      frame_stride_(SecondsToSamples(config.frame_stride_s, sampling_frequency)),
      window_(MakeWindow(config.window, frame_length_)),
      fft_(config.fft_length.value_or(NextPowerOfTwo(frame_length_))),
      filterbank_(BuildFilterBank(config.num_filters, fft_.size(),
                                  sampling_frequency, config.low_freq,
                                  config.high_freq.value_or(
                                      sampling_frequency / 2.0))) {
  if (frame_length_ == 0 || frame_stride_ == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "frame length and stride must round to at least one sample");
  }
  if (fft_.size() < frame_length_) {
    throw Error(ErrorCode::kInvalidFftLength,
                "fft length " + std::to_string(fft_.size()) +
                    " is shorter than frame length " +
                    std::to_string(frame_length_));
  }
}

void FeaturePipeline::CheckRate(const AudioBuffer& signal) const {
  if (signal.sampling_frequency != sampling_frequency_) {
    throw Error(ErrorCode::kInvalidParameter,
                "signal sampled at " +
                    std::to_string(signal.sampling_frequency) +
                    " Hz given to a pipeline built for " +
                    std::to_string(sampling_frequency_) + " Hz");
  }
}

FeatureMatrix FeaturePipeline::Mfe(const AudioBuffer& signal) const {
  CheckRate(signal);
  FrameMatrix frames =
      StackFramesSamples(PreEmphasis(signal, config_.alpha), frame_length_,
                         frame_stride_, config_.zero_padding);
  if (config_.window != WindowType::kRectangular) {
    ApplyWindowInPlace(frames, window_);
  }
  const SpectrumMatrix power = PowerSpectrum(frames, fft_);

  const std::size_t num_frames = power.data.rows();
  const std::size_t num_filters = filterbank_.num_filters();
  const std::size_t num_bins = filterbank_.num_bins();
  const double floor = EnergyFloor();

  FeatureMatrix out{Matrix(num_frames, num_filters), FeatureKind::kMfe,
                    std::vector<double>(num_frames)};
  for (std::size_t t = 0; t < num_frames; ++t) {
    auto p = power.data.row(t);
    double total = 0.0;
    for (std::size_t k = 0; k < num_bins; ++k) total += p[k];
    out.frame_energies[t] = total > 0.0 ? total : floor;

    auto e = out.data.row(t);
    for (std::size_t i = 0; i < num_filters; ++i) {
      auto w = filterbank_.weights.row(i);
      double acc = 0.0;
      for (std::size_t k = 0; k < num_bins; ++k) acc += p[k] * w[k];
      e[i] = acc > 0.0 ? acc : floor;
    }
  }
  return out;
}

FeatureMatrix FeaturePipeline::Lmfe(const AudioBuffer& signal) const {
  FeatureMatrix out = Mfe(signal);
  out.kind = FeatureKind::kLmfe;
  for (double& v : out.data.values()) v = std::log(v);
  return out;
}

FeatureMatrix FeaturePipeline::Mfcc(const AudioBuffer& signal) const {
  return MfccFromLmfe(Lmfe(signal), config_.num_cepstral,
                      config_.dc_elimination);
}

FeatureMatrix Mfe(const AudioBuffer& signal, const FeatureConfig& config) {
  return FeaturePipeline(config, signal.sampling_frequency).Mfe(signal);
}

FeatureMatrix Lmfe(const AudioBuffer& signal, const FeatureConfig& config) {
  return FeaturePipeline(config, signal.sampling_frequency).Lmfe(signal);
}

FeatureMatrix Mfcc(const AudioBuffer& signal, const FeatureConfig& config) {
  return FeaturePipeline(config, signal.sampling_frequency).Mfcc(signal);
}

std::vector<double> DctIIOrtho(std::span<const double> row) {
  const std::size_t m = row.size();
  std::vector<double> out(m, 0.0);
  if (m == 0) return out;
  const double md = static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k) {
    double acc = 0.0;
    for (std::size_t n = 0; n < m; ++n) {
      acc += row[n] * std::cos(std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(2 * n + 1) / (2.0 * md));
    }
    out[k] = acc * std::sqrt((k == 0 ? 1.0 : 2.0) / md);
  }
  return out;
}

FeatureMatrix MfccFromLmfe(const FeatureMatrix& lmfe, std::size_t num_cepstral,
                           bool dc_elimination) {
  const std::size_t m = lmfe.data.cols();
  const std::size_t first = dc_elimination ? 1 : 0;
  if (num_cepstral < 1 || first + num_cepstral > m) {
    throw Error(ErrorCode::kInvalidParameter,
                "cannot keep " + std::to_string(num_cepstral) +
                    " cepstral coefficients from " + std::to_string(m) +
                    " filters");
  }
  FeatureMatrix out{Matrix(lmfe.data.rows(), num_cepstral), FeatureKind::kMfcc,
                    lmfe.frame_energies};
  for (std::size_t t = 0; t < lmfe.data.rows(); ++t) {
    const std::vector<double> cep = DctIIOrtho(lmfe.data.row(t));
    std::copy_n(cep.begin() + static_cast<std::ptrdiff_t>(first), num_cepstral,
                out.data.row(t).begin());
  }
  return out;
}

Matrix ComputeDelta(const Matrix& features, std::size_t half_width) {
  if (half_width < 1) {
    throw Error(ErrorCode::kInvalidParameter, "delta half width must be >= 1");
  }
  const std::size_t num_frames = features.rows();
  const std::size_t dim = features.cols();
  Matrix delta(num_frames, dim);
  if (num_frames == 0) return delta;

  double denom = 0.0;
  for (std::size_t n = 1; n <= half_width; ++n) {
    denom += static_cast<double>(n * n);
  }
  denom *= 2.0;

  const auto last = static_cast<std::ptrdiff_t>(num_frames) - 1;
  auto clamp = [last](std::ptrdiff_t t) {
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(t, 0, last));
  };
  for (std::size_t t = 0; t < num_frames; ++t) {
    const auto ts = static_cast<std::ptrdiff_t>(t);
    auto out = delta.row(t);
    for (std::size_t n = 1; n <= half_width; ++n) {
      const auto ns = static_cast<std::ptrdiff_t>(n);
      auto ahead = features.row(clamp(ts + ns));
      auto behind = features.row(clamp(ts - ns));
      for (std::size_t d = 0; d < dim; ++d) {
        out[d] += static_cast<double>(n) * (ahead[d] - behind[d]);
      }
    }
    for (double& v : out) v /= denom;
  }
  return delta;
}

FeatureMatrix ExtractDerivative(const FeatureMatrix& features,
                                std::size_t half_width) {
  if (features.data.rows() == 0) {
    throw Error(ErrorCode::kEmptyFeatures, "no frames to differentiate");
  }
  const Matrix delta = ComputeDelta(features.data, half_width);
  const Matrix delta2 = ComputeDelta(delta, half_width);

  const std::size_t dim = features.data.cols();
  FeatureMatrix out{Matrix(features.data.rows(), 3 * dim),
                    FeatureKind::kDerivativeStacked, {}};
  for (std::size_t t = 0; t < out.data.rows(); ++t) {
    auto row = out.data.row(t);
    std::copy_n(features.data.row(t).begin(), dim, row.begin());
    std::copy_n(delta.row(t).begin(), dim, row.begin() + dim);
    std::copy_n(delta2.row(t).begin(), dim, row.begin() + 2 * dim);
  }
  return out;
}

}  // namespace speechfeat
