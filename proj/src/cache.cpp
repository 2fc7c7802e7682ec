// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/cache.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "qwalk/models.hpp"

namespace qwalk {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

constexpr const char* kMagic = "qwalk-cache-1";

}  // namespace

const std::string& code_data_version() {
  static const std::string v = "0.1.0-" + hex(fnv1a64(bundled_models_json())).substr(0, 8);
  return v;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_env() {
  if (const char* e = std::getenv("QWALK_CACHE"); e && *e) return Cache(e);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return Cache(fs::path(x) / "qwalk");
  if (const char* h = std::getenv("HOME"); h && *h) return Cache(fs::path(h) / ".cache" / "qwalk");
  return Cache(fs::temp_directory_path() / "qwalk-cache");
}

std::string Cache::key(const std::string& kind, const std::string& subject, const std::string& spec, int order) {
  return kind + "_" + subject + "_" + spec + "_" + std::to_string(order) + "_" + code_data_version();
}

fs::path Cache::path_for(const std::string& key) const {
  std::string safe;
  for (char c : key) safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') ? c : '_';
  return dir_ / (safe + ".json");
}

std::optional<Json> Cache::get(const std::string& key) const {
  fs::path p = path_for(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string payload = ss.str();
  std::istringstream hs(header);
  std::string magic, sum;
  hs >> magic >> sum;
  auto drop = [&]() {
    std::error_code ec;
    fs::remove(p, ec);
    return std::nullopt;
  };
  if (magic != kMagic || sum != hex(fnv1a64(payload))) return drop();
  try {
    return Json::parse(payload);
  } catch (const Json::exception&) {
    return drop();
  }
}

void Cache::put(const std::string& key, const Json& value) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(ErrorCode::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  std::string payload = value.dump();
  fs::path target = path_for(key);
  std::ostringstream tn;
  tn << target.filename().string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
     << "." << counter++;
  fs::path tmp = dir_ / tn.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp.string());
    out << kMagic << " " << hex(fnv1a64(payload)) << "\n" << payload;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      fail(ErrorCode::Io, "short write to " + tmp.string());
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorCode::Io, "cannot rename cache entry into place");
  }
}

}  // namespace qwalk
