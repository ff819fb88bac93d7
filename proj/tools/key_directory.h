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

// On-disk public key repository plus the local user's private keys.
//
//   <root>/pp.dbe                 public parameters
//   <root>/users/<i>.upk.dbe      public keys, validated before writing
//   <root>/private/<i>.usk.dbe    secret keys, mode 0600 in a 0700 directory

#ifndef DBE_TOOLS_KEY_DIRECTORY_H_
#define DBE_TOOLS_KEY_DIRECTORY_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dbe/dbe_ad.h"
#include "dbe/random.h"

namespace dbe::cli {

absl::StatusOr<std::vector<uint8_t>> ReadFile(const std::filesystem::path& p);

// Writes through a temporary file and rename, so readers never see a
// partial object. The file is created with `mode` before any byte lands.
absl::Status WriteFileAtomic(const std::filesystem::path& p,
                             std::span<const uint8_t> bytes, unsigned mode);

class KeyDirectory {
 public:
  // Initializes `root` with fresh parameters. An existing pp.dbe is an
  // error unless `force`, in which case stale user keys are removed too.
  static absl::StatusOr<KeyDirectory> Create(const std::filesystem::path& root,
                                             const ad::PublicParams& pp,
                                             bool force);
  static absl::StatusOr<KeyDirectory> Open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }
  const ad::PublicParams& params() const { return pp_; }
  Index users() const { return ad::UserCapacity(pp_); }

  std::filesystem::path ParamsPath() const;
  std::filesystem::path PublicKeyPath(Index i) const;
  std::filesystem::path SecretKeyPath(Index i) const;

  // Runs the validity check on `upk` and refuses to store a key that fails
  // it. An index already present is an error unless `force`.
  absl::Status AddUser(const ad::UserPublicKey& upk,
                       const ad::UserSecretKey& usk, bool force,
                       RandomSource& rng);

  bool HasPublicKey(Index i) const;
  bool HasSecretKey(Index i) const;
  absl::StatusOr<ad::UserPublicKey> LoadPublicKey(Index i) const;
  absl::StatusOr<ad::UserSecretKey> LoadSecretKey(Index i) const;
  absl::StatusOr<ad::PublicKeyMap> LoadPublicKeys(const IndexSet& s) const;

  // Indices with a public key file, ascending.
  std::vector<Index> ListUsers() const;

 private:
  KeyDirectory(std::filesystem::path root, ad::PublicParams pp)
      : root_(std::move(root)), pp_(std::move(pp)) {}

  absl::Status CheckIndex(Index i) const;

  std::filesystem::path root_;
  ad::PublicParams pp_;
};

}  // namespace dbe::cli

#endif  // DBE_TOOLS_KEY_DIRECTORY_H_
