// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "qwalk/json_io.hpp"

namespace qwalk {

std::uint64_t fnv1a64(const std::string& data);

// version tag mixed into every key: library version plus a hash of the bundled data
const std::string& code_data_version();

// On-disk JSON cache. Entries are written to a temporary file and renamed into
// place; each file carries a checksum of its payload, and entries that fail the
// check are removed and reported as misses.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  // QWALK_CACHE, else $XDG_CACHE_HOME/qwalk, else ~/.cache/qwalk
  static Cache from_env();
  static std::string key(const std::string& kind, const std::string& subject, const std::string& spec, int order);

  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, const Json& value) const;
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace qwalk
