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

#ifndef DBE_STATUS_H_
#define DBE_STATUS_H_

#include <cstdint>
#include <string_view>

#include "absl/status/status.h"

namespace dbe {

// Fine-grained failure kinds, carried as a payload on absl::Status so callers
// (notably the CLI exit-code map) can tell them apart.
enum class ErrorCode : uint8_t {
  kUnknown = 0,
  kTruncated,
  kBadMagic,
  kUnknownKind,
  kUnsupportedVersion,
  kWrongKind,
  kIndexSet,
  kBadEncoding,
  kNotOnCurve,
  kNotInSubgroup,
  kTrailingBytes,
  kLengthMismatch,
  kInvalidArgument,
  kMissingKey,
  kUnsignableKey,
  kInvalidKey,
  kIo,
  kAlreadyExists,
};

absl::Status MakeError(ErrorCode code, std::string_view message);

// kUnknown for OK statuses and statuses without a payload.
ErrorCode ErrorCodeOf(const absl::Status& status);

std::string_view ErrorCodeName(ErrorCode code);

}  // namespace dbe

#define DBE_RETURN_IF_ERROR(expr)            \
  do {                                       \
    const absl::Status _dbe_status = (expr); \
    if (!_dbe_status.ok()) return _dbe_status; \
  } while (0)

#define DBE_ASSIGN_OR_RETURN_IMPL(tmp, lhs, expr) \
  auto tmp = (expr);                              \
  if (!tmp.ok()) return tmp.status();             \
  lhs = std::move(*tmp)

#define DBE_CONCAT_INNER(a, b) a##b
#define DBE_CONCAT(a, b) DBE_CONCAT_INNER(a, b)
#define DBE_ASSIGN_OR_RETURN(lhs, expr) \
  DBE_ASSIGN_OR_RETURN_IMPL(DBE_CONCAT(_dbe_statusor_, __LINE__), lhs, expr)

#endif  // DBE_STATUS_H_
