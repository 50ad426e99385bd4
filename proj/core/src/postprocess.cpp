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

#include "speechfeat/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "speechfeat/error.hpp"

namespace speechfeat {

FeatureMatrix Cmvn(const FeatureMatrix& features, bool variance_normalization) {
  const std::size_t num_frames = features.data.rows();
  const std::size_t dim = features.data.cols();
  if (num_frames == 0) {
    throw Error(ErrorCode::kEmptyFeatures, "cannot normalize zero frames");
  }
  const double count = static_cast<double>(num_frames);

  std::vector<double> mean(dim, 0.0);
  for (std::size_t t = 0; t < num_frames; ++t) {
    auto row = features.data.row(t);
    for (std::size_t d = 0; d < dim; ++d) mean[d] += row[d];
  }
  for (double& m : mean) m /= count;

  FeatureMatrix out = features;
  for (std::size_t t = 0; t < num_frames; ++t) {
    auto row = out.data.row(t);
    for (std::size_t d = 0; d < dim; ++d) row[d] -= mean[d];
  }
  if (!variance_normalization) return out;

  std::vector<double> scale(dim, 0.0);
  for (std::size_t t = 0; t < num_frames; ++t) {
    auto row = out.data.row(t);
    for (std::size_t d = 0; d < dim; ++d) scale[d] += row[d] * row[d];
  }
  for (double& s : scale) s = std::sqrt(s / count) + kVarianceGuard;
  for (std::size_t t = 0; t < num_frames; ++t) {
    auto row = out.data.row(t);
    for (std::size_t d = 0; d < dim; ++d) row[d] /= scale[d];
  }
  return out;
}

FeatureMatrix Cmvnw(const FeatureMatrix& features, std::size_t win_size,
                    bool variance_normalization) {
  if (win_size < 3 || win_size % 2 == 0) {
    throw Error(ErrorCode::kInvalidWindow,
                "window size " + std::to_string(win_size) +
                    " must be odd and at least 3");
  }
  const std::size_t num_frames = features.data.rows();
  const std::size_t dim = features.data.cols();
  if (num_frames == 0) {
    throw Error(ErrorCode::kEmptyFeatures, "cannot normalize zero frames");
  }

  const auto half = static_cast<std::ptrdiff_t>(win_size / 2);
  const auto last = static_cast<std::ptrdiff_t>(num_frames) - 1;
  const double count = static_cast<double>(win_size);

  FeatureMatrix out = features;
  std::vector<std::size_t> window(win_size);
  for (std::size_t t = 0; t < num_frames; ++t) {
    const auto ts = static_cast<std::ptrdiff_t>(t);
    for (std::ptrdiff_t j = -half; j <= half; ++j) {
      window[static_cast<std::size_t>(j + half)] =
          static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(ts + j, 0, last));
    }
    auto row = out.data.row(t);
    for (std::size_t d = 0; d < dim; ++d) {
      double sum = 0.0;
      for (std::size_t idx : window) sum += features.data(idx, d);
      const double mean = sum / count;
      row[d] = features.data(t, d) - mean;
      if (variance_normalization) {
        double sq = 0.0;
        for (std::size_t idx : window) {
          const double dev = features.data(idx, d) - mean;
          sq += dev * dev;
        }
        row[d] /= std::sqrt(sq / count) + kVarianceGuard;
      }
    }
  }
  return out;
}

}  // namespace speechfeat
