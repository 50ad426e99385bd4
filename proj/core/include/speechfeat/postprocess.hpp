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

#ifndef SPEECHFEAT_POSTPROCESS_HPP_
#define SPEECHFEAT_POSTPROCESS_HPP_

#include <cstddef>

#include "speechfeat/features.hpp"

namespace speechfeat {

// Guard added to the standard deviation before dividing.
inline constexpr double kVarianceGuard = 1e-10;
inline constexpr std::size_t kDefaultCmvnWindow = 301;

// Utterance-level mean (and optionally variance) normalization per column.
// Statistics are population moments; the divisor is sigma + 1e-10, so a
// single frame normalizes to zero.
FeatureMatrix Cmvn(const FeatureMatrix& features, bool variance_normalization);

// Sliding-window variant. Each frame is normalized with statistics over the
// win_size frames centred on it, replicating the first/last frame beyond
// the edges. win_size must be odd and >= 3; it may exceed the number of
// frames.
FeatureMatrix Cmvnw(const FeatureMatrix& features,
                    std::size_t win_size = kDefaultCmvnWindow,
                    bool variance_normalization = false);

}  // namespace speechfeat

#endif  // SPEECHFEAT_POSTPROCESS_HPP_
