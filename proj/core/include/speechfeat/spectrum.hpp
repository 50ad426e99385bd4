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

#ifndef SPEECHFEAT_SPECTRUM_HPP_
#define SPEECHFEAT_SPECTRUM_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "speechfeat/matrix.hpp"
#include "speechfeat/preprocess.hpp"

namespace speechfeat {

enum class SpectrumKind { kMagnitude, kPower, kLogPower };

// T x (N/2 + 1) per-frame spectrum. Bin k sits at k * fs / N Hz.
struct SpectrumMatrix {
  Matrix data;
  SpectrumKind kind = SpectrumKind::kPower;
  std::size_t fft_length = 0;
  int sampling_frequency = 0;

  std::size_t num_bins() const { return fft_length / 2 + 1; }
};

// Lower bound applied to power before taking logs; 10*log10 gives -300 dB.
inline constexpr double kPowerFloor = 1e-30;

bool IsPowerOfTwo(std::size_t n);
std::size_t NextPowerOfTwo(std::size_t n);

// O(N^2) evaluation of the DFT definition. Used as the reference for the
// fast transform.
std::vector<std::complex<double>> NaiveDft(std::span<const double> frame);

// Radix-2 FFT for real input of a fixed power-of-two length. The length-N
// real transform is computed as an N/2-point complex transform of the
// even/odd interleaved samples followed by a split step. Tables are built
// once in the constructor; Transform is const and may be called
// concurrently.
class RealFft {
 public:
  explicit RealFft(std::size_t fft_length);

  std::size_t size() const { return n_; }
  std::size_t num_bins() const { return n_ / 2 + 1; }

  // Zero-pads `input` (size <= N) to N and writes bins 0..N/2 to `out`.
  void Transform(std::span<const double> input,
                 std::span<std::complex<double>> out) const;

 private:
  void ComplexFft(std::span<std::complex<double>> data) const;

  std::size_t n_;
  std::size_t half_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<std::complex<double>> twiddles_;        // e^{-2 pi i j / half}
  std::vector<std::complex<double>> split_twiddles_;  // e^{-2 pi i k / n}
};

SpectrumMatrix FftMagnitude(const FrameMatrix& frames, std::size_t fft_length);

// P[k] = |X[k]|^2 / N.
SpectrumMatrix PowerSpectrum(const FrameMatrix& frames, std::size_t fft_length);
SpectrumMatrix PowerSpectrum(const FrameMatrix& frames, const RealFft& fft);

// 10 * log10(max(P, 1e-30)); with `normalize` the global maximum is
// subtracted so the largest entry is 0.
SpectrumMatrix LogPowerSpectrum(const FrameMatrix& frames,
                                std::size_t fft_length, bool normalize);

}  // namespace speechfeat

#endif  // SPEECHFEAT_SPECTRUM_HPP_
