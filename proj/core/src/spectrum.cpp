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

#include "speechfeat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "speechfeat/error.hpp"

namespace speechfeat {
namespace {

std::complex<double> UnitRoot(std::size_t k, std::size_t n) {
  const double angle =
      -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

void CheckFftLength(std::size_t fft_length, std::size_t frame_length) {
  if (!IsPowerOfTwo(fft_length)) {
    throw Error(ErrorCode::kInvalidFftLength,
                "fft length " + std::to_string(fft_length) +
                    " is not a power of two");
  }
  if (fft_length < frame_length) {
    throw Error(ErrorCode::kInvalidFftLength,
                "fft length " + std::to_string(fft_length) +
                    " is shorter than frame length " +
                    std::to_string(frame_length));
  }
}

template <typename BinFn>
SpectrumMatrix Transform(const FrameMatrix& frames, const RealFft& fft,
                         SpectrumKind kind, BinFn&& bin_fn) {
  CheckFftLength(fft.size(), frames.data.cols());
  SpectrumMatrix out{Matrix(frames.data.rows(), fft.num_bins()), kind,
                     fft.size(), frames.sampling_frequency};
  std::vector<std::complex<double>> bins(fft.num_bins());
  for (std::size_t t = 0; t < frames.data.rows(); ++t) {
    fft.Transform(frames.data.row(t), bins);
    auto row = out.data.row(t);
    for (std::size_t k = 0; k < bins.size(); ++k) row[k] = bin_fn(bins[k]);
  }
  return out;
}

}  // namespace

bool IsPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> NaiveDft(std::span<const double> frame) {
  const std::size_t n = frame.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce k*j mod n so the angle stays in [0, 2 pi).
      acc += frame[j] * UnitRoot((k * j) % n, n);
    }
    out[k] = acc;
  }
  return out;
}

RealFft::RealFft(std::size_t fft_length) : n_(fft_length), half_(fft_length / 2) {
  if (!IsPowerOfTwo(fft_length)) {
    throw Error(ErrorCode::kInvalidFftLength,
                "fft length " + std::to_string(fft_length) +
                    " is not a power of two");
  }
  if (half_ >= 1) {
    bit_reverse_.resize(half_);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < half_) ++bits;
    for (std::size_t i = 0; i < half_; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) {
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      }
      bit_reverse_[i] = r;
    }
    twiddles_.resize(half_ / 2 + 1);
    for (std::size_t j = 0; j < twiddles_.size(); ++j) {
      twiddles_[j] = UnitRoot(j, half_);
    }
    split_twiddles_.resize(half_ + 1);
    for (std::size_t k = 0; k <= half_; ++k) {
      split_twiddles_[k] = UnitRoot(k, n_);
    }
  }
}

void RealFft::ComplexFft(std::span<std::complex<double>> data) const {
  const std::size_t n = data.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i < bit_reverse_[i]) std::swap(data[i], data[bit_reverse_[i]]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    const std::size_t h = len / 2;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < h; ++j) {
        const std::complex<double> w = twiddles_[j * step];
        const std::complex<double> u = data[start + j];
        const std::complex<double> v = data[start + j + h] * w;
        data[start + j] = u + v;
        data[start + j + h] = u - v;
      }
    }
  }
}

void RealFft::Transform(std::span<const double> input,
                        std::span<std::complex<double>> out) const {
  if (input.size() > n_) {
    throw Error(ErrorCode::kInvalidFftLength,
                "input longer than fft length");
  }
  if (out.size() != num_bins()) {
    throw Error(ErrorCode::kInvalidParameter,
                "output span must hold N/2 + 1 bins");
  }
  auto sample = [&](std::size_t i) {
    return i < input.size() ? input[i] : 0.0;
  };
  if (n_ == 1) {
    out[0] = sample(0);
    return;
  }

  // Pack even samples as real parts and odd samples as imaginary parts.
  std::vector<std::complex<double>> z(half_);
  for (std::size_t m = 0; m < half_; ++m) {
    z[m] = {sample(2 * m), sample(2 * m + 1)};
  }
  ComplexFft(z);

  // X[k] = E[k] + W^k O[k] with E, O the transforms of the even and odd
  // subsequences, recovered from Z by conjugate symmetry.
  for (std::size_t k = 0; k <= half_; ++k) {
    const std::complex<double> zk = z[k % half_];
    const std::complex<double> zc = std::conj(z[(half_ - k) % half_]);
    const std::complex<double> even = 0.5 * (zk + zc);
    const std::complex<double> odd =
        std::complex<double>(0.0, -0.5) * (zk - zc);
    out[k] = even + split_twiddles_[k] * odd;
  }
}

SpectrumMatrix FftMagnitude(const FrameMatrix& frames, std::size_t fft_length) {
  CheckFftLength(fft_length, frames.data.cols());
  RealFft fft(fft_length);
  return Transform(frames, fft, SpectrumKind::kMagnitude,
                   [](std::complex<double> x) { return std::abs(x); });
}

SpectrumMatrix PowerSpectrum(const FrameMatrix& frames, const RealFft& fft) {
  const double scale = 1.0 / static_cast<double>(fft.size());
  return Transform(frames, fft, SpectrumKind::kPower,
                   [scale](std::complex<double> x) {
                     return scale * std::norm(x);
                   });
}

SpectrumMatrix PowerSpectrum(const FrameMatrix& frames, std::size_t fft_length) {
  CheckFftLength(fft_length, frames.data.cols());
  return PowerSpectrum(frames, RealFft(fft_length));
}

SpectrumMatrix LogPowerSpectrum(const FrameMatrix& frames,
                                std::size_t fft_length, bool normalize) {
  SpectrumMatrix out = PowerSpectrum(frames, fft_length);
  out.kind = SpectrumKind::kLogPower;
  auto values = out.data.values();
  for (double& v : values) v = 10.0 * std::log10(std::max(v, kPowerFloor));
  if (normalize && !values.empty()) {
    const double peak = *std::max_element(values.begin(), values.end());
    for (double& v : values) v -= peak;
  }
  return out;
}

}  // namespace speechfeat
