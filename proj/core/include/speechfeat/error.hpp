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

#ifndef SPEECHFEAT_ERROR_HPP_
#define SPEECHFEAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace speechfeat {

enum class ErrorCode {
  kMissingFile,
  kMalformedWav,
  kUnsupportedFormat,
  kEmptySignal,
  kFrameTooLong,
  kInvalidParameter,
  kInvalidFftLength,
  kNegativeFrequency,
  kNegativeMel,
  kInvalidBand,
  kDegenerateFilter,
  kEmptyFeatures,
  kInvalidWindow,
  kIoError,
  kUnknownKey,
  kInvalidValue,
  kMissingInput,
  kOutputDirUnwritable,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// branch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace speechfeat

#endif  // SPEECHFEAT_ERROR_HPP_
