/*
 * Copyright 2026 The DBE Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dbe/status.h"

#include <string>

#include "absl/strings/cord.h"

namespace dbe {

namespace {

constexpr absl::string_view kPayloadUrl = "dbe/error-code";

absl::StatusCode CanonicalCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return absl::StatusCode::kUnavailable;
    case ErrorCode::kAlreadyExists:
      return absl::StatusCode::kAlreadyExists;
    case ErrorCode::kMissingKey:
      return absl::StatusCode::kNotFound;
    case ErrorCode::kUnsignableKey:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorCode::kTruncated:
    case ErrorCode::kTrailingBytes:
      return absl::StatusCode::kDataLoss;
    default:
      return absl::StatusCode::kInvalidArgument;
  }
}

}  // namespace

absl::Status MakeError(ErrorCode code, std::string_view message) {
  absl::Status status(CanonicalCode(code), std::string(message));
  status.SetPayload(kPayloadUrl,
                    absl::Cord(std::string(1, static_cast<char>(code))));
  return status;
}

ErrorCode ErrorCodeOf(const absl::Status& status) {
  if (status.ok()) return ErrorCode::kUnknown;
  auto payload = status.GetPayload(kPayloadUrl);
  if (!payload.has_value()) return ErrorCode::kUnknown;
  std::string bytes(*payload);
  if (bytes.size() != 1) return ErrorCode::kUnknown;
  return static_cast<ErrorCode>(static_cast<uint8_t>(bytes[0]));
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknown: return "unknown";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kBadMagic: return "bad-magic";
    case ErrorCode::kUnknownKind: return "unknown-kind";
    case ErrorCode::kUnsupportedVersion: return "unsupported-version";
    case ErrorCode::kWrongKind: return "wrong-kind";
    case ErrorCode::kIndexSet: return "index-set";
    case ErrorCode::kBadEncoding: return "bad-encoding";
    case ErrorCode::kNotOnCurve: return "not-on-curve";
    case ErrorCode::kNotInSubgroup: return "not-in-subgroup";
    case ErrorCode::kTrailingBytes: return "trailing-bytes";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kMissingKey: return "missing-key";
    case ErrorCode::kUnsignableKey: return "unsignable-key";
    case ErrorCode::kInvalidKey: return "invalid-key";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kAlreadyExists: return "already-exists";
  }
  return "unknown";
}

}  // namespace dbe
