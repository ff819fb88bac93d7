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

#include "key_directory.h"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "dbe/codec.h"
#include "dbe/status.h"

namespace dbe::cli {

namespace fs = std::filesystem;

namespace {

constexpr unsigned kPublicMode = 0644;
constexpr unsigned kSecretMode = 0600;
constexpr unsigned kPrivateDirMode = 0700;

constexpr std::string_view kPublicSuffix = ".upk.dbe";
constexpr std::string_view kSecretSuffix = ".usk.dbe";

absl::Status IoError(const fs::path& p, std::string_view what, int err) {
  return MakeError(ErrorCode::kIo,
                   absl::StrCat(std::string(what), " ", p.string(), ": ",
                                std::strerror(err)));
}

absl::Status MakeDir(const fs::path& p, unsigned mode) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) return IoError(p, "cannot create", ec.value());
  if (::chmod(p.c_str(), mode) != 0) return IoError(p, "cannot chmod", errno);
  return absl::OkStatus();
}

absl::Status WriteAll(int fd, std::span<const uint8_t> bytes) {
  size_t done = 0;
  while (done < bytes.size()) {
    ssize_t n = ::write(fd, bytes.data() + done, bytes.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      return MakeError(ErrorCode::kIo, std::strerror(errno));
    }
    done += static_cast<size_t>(n);
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::vector<uint8_t>> ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    if (!fs::exists(p)) {
      return MakeError(ErrorCode::kMissingKey,
                       absl::StrCat("no such file: ", p.string()));
    }
    return IoError(p, "cannot read", errno);
  }
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), {});
}

absl::Status WriteFileAtomic(const fs::path& p, std::span<const uint8_t> bytes,
                             unsigned mode) {
  const fs::path tmp = fs::path(p).concat(".tmp");
  ::unlink(tmp.c_str());
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, mode);
  if (fd < 0) return IoError(tmp, "cannot create", errno);
  absl::Status st = WriteAll(fd, bytes);
  if (st.ok() && ::fchmod(fd, mode) != 0) st = IoError(tmp, "cannot chmod", errno);
  if (st.ok() && ::fsync(fd) != 0) st = IoError(tmp, "cannot sync", errno);
  ::close(fd);
  if (st.ok() && ::rename(tmp.c_str(), p.c_str()) != 0) {
    st = IoError(p, "cannot rename onto", errno);
  }
  if (!st.ok()) ::unlink(tmp.c_str());
  return st;
}

absl::StatusOr<KeyDirectory> KeyDirectory::Create(const fs::path& root,
                                                  const ad::PublicParams& pp,
                                                  bool force) {
  KeyDirectory dir(root, pp);
  if (fs::exists(dir.ParamsPath())) {
    if (!force) {
      return MakeError(ErrorCode::kAlreadyExists,
                       absl::StrCat(dir.ParamsPath().string(),
                                    " exists (use --force to replace)"));
    }
    std::error_code ec;
    fs::remove_all(root / "users", ec);
    if (ec) return IoError(root / "users", "cannot remove", ec.value());
    fs::remove_all(root / "private", ec);
    if (ec) return IoError(root / "private", "cannot remove", ec.value());
  }
  DBE_RETURN_IF_ERROR(MakeDir(root, 0755));
  DBE_RETURN_IF_ERROR(MakeDir(root / "users", 0755));
  DBE_RETURN_IF_ERROR(MakeDir(root / "private", kPrivateDirMode));
  DBE_RETURN_IF_ERROR(
      WriteFileAtomic(dir.ParamsPath(), codec::Encode(pp), kPublicMode));
  return dir;
}

absl::StatusOr<KeyDirectory> KeyDirectory::Open(const fs::path& root) {
  const fs::path pp_path = root / "pp.dbe";
  if (!fs::exists(pp_path)) {
    return MakeError(ErrorCode::kMissingKey,
                     absl::StrCat("not a key directory (no pp.dbe): ",
                                  root.string()));
  }
  DBE_ASSIGN_OR_RETURN(std::vector<uint8_t> bytes, ReadFile(pp_path));
  DBE_ASSIGN_OR_RETURN(ad::PublicParams pp, codec::DecodePublicParams(bytes));
  if (pp.capacity % 2 != 0) {
    return MakeError(ErrorCode::kBadEncoding,
                     "pp.dbe capacity is odd; not adaptive-scheme parameters");
  }
  return KeyDirectory(root, std::move(pp));
}

fs::path KeyDirectory::ParamsPath() const { return root_ / "pp.dbe"; }

fs::path KeyDirectory::PublicKeyPath(Index i) const {
  return root_ / "users" / absl::StrCat(i, std::string(kPublicSuffix));
}

fs::path KeyDirectory::SecretKeyPath(Index i) const {
  return root_ / "private" / absl::StrCat(i, std::string(kSecretSuffix));
}

absl::Status KeyDirectory::CheckIndex(Index i) const {
  if (i < 1 || i > users()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("index ", i, " outside [1, ", users(), "]"));
  }
  return absl::OkStatus();
}

absl::Status KeyDirectory::AddUser(const ad::UserPublicKey& upk,
                                   const ad::UserSecretKey& usk, bool force,
                                   RandomSource& rng) {
  DBE_RETURN_IF_ERROR(CheckIndex(upk.index));
  if (usk.index != upk.index) {
    return MakeError(ErrorCode::kInvalidArgument, "key pair index mismatch");
  }
  if (!force && (HasPublicKey(upk.index) || HasSecretKey(upk.index))) {
    return MakeError(ErrorCode::kAlreadyExists,
                     absl::StrCat("user ", upk.index,
                                  " already has keys (use --force to replace)"));
  }
  if (!ad::IsValid(upk.index, upk, pp_, rng)) {
    return MakeError(ErrorCode::kInvalidKey,
                     absl::StrCat("public key for user ", upk.index,
                                  " fails the validity check"));
  }
  DBE_RETURN_IF_ERROR(MakeDir(root_ / "private", kPrivateDirMode));
  DBE_RETURN_IF_ERROR(
      WriteFileAtomic(SecretKeyPath(usk.index), codec::Encode(usk), kSecretMode));
  return WriteFileAtomic(PublicKeyPath(upk.index), codec::Encode(upk),
                         kPublicMode);
}

bool KeyDirectory::HasPublicKey(Index i) const {
  return fs::exists(PublicKeyPath(i));
}

bool KeyDirectory::HasSecretKey(Index i) const {
  return fs::exists(SecretKeyPath(i));
}

absl::StatusOr<ad::UserPublicKey> KeyDirectory::LoadPublicKey(Index i) const {
  DBE_RETURN_IF_ERROR(CheckIndex(i));
  DBE_ASSIGN_OR_RETURN(std::vector<uint8_t> bytes, ReadFile(PublicKeyPath(i)));
  DBE_ASSIGN_OR_RETURN(ad::UserPublicKey upk, codec::DecodeAdPublicKey(bytes));
  if (upk.index != i || upk.even.capacity != pp_.capacity) {
    return MakeError(ErrorCode::kInvalidKey,
                     absl::StrCat(PublicKeyPath(i).string(),
                                  " does not belong to this slot"));
  }
  return upk;
}

absl::StatusOr<ad::UserSecretKey> KeyDirectory::LoadSecretKey(Index i) const {
  DBE_RETURN_IF_ERROR(CheckIndex(i));
  DBE_ASSIGN_OR_RETURN(std::vector<uint8_t> bytes, ReadFile(SecretKeyPath(i)));
  DBE_ASSIGN_OR_RETURN(ad::UserSecretKey usk, codec::DecodeAdSecretKey(bytes));
  std::fill(bytes.begin(), bytes.end(), 0);
  if (usk.index != i || usk.slot_key.capacity != pp_.capacity) {
    return MakeError(ErrorCode::kInvalidKey,
                     absl::StrCat(SecretKeyPath(i).string(),
                                  " does not belong to this slot"));
  }
  return usk;
}

absl::StatusOr<ad::PublicKeyMap> KeyDirectory::LoadPublicKeys(
    const IndexSet& s) const {
  ad::PublicKeyMap out;
  for (Index j : s) {
    DBE_ASSIGN_OR_RETURN(out[j], LoadPublicKey(j));
  }
  return out;
}

std::vector<Index> KeyDirectory::ListUsers() const {
  std::vector<Index> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root_ / "users", ec)) {
    const std::string name = entry.path().filename().string();
    if (name.size() <= kPublicSuffix.size() ||
        !name.ends_with(kPublicSuffix)) {
      continue;
    }
    uint32_t i = 0;
    if (absl::SimpleAtoi(name.substr(0, name.size() - kPublicSuffix.size()),
                         &i) &&
        i >= 1 && i <= users()) {
      out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dbe::cli
