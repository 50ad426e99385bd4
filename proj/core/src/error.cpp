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

#include "speechfeat/error.hpp"

namespace speechfeat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kMalformedWav: return "MalformedWav";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kEmptySignal: return "EmptySignal";
    case ErrorCode::kFrameTooLong: return "FrameTooLong";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kInvalidFftLength: return "InvalidFftLength";
    case ErrorCode::kNegativeFrequency: return "NegativeFrequency";
    case ErrorCode::kNegativeMel: return "NegativeMel";
    case ErrorCode::kInvalidBand: return "InvalidBand";
    case ErrorCode::kDegenerateFilter: return "DegenerateFilter";
    case ErrorCode::kEmptyFeatures: return "EmptyFeatures";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kInvalidValue: return "InvalidValue";
    case ErrorCode::kMissingInput: return "MissingInput";
    case ErrorCode::kOutputDirUnwritable: return "OutputDirUnwritable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace speechfeat
